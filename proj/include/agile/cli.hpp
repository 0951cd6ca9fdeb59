#pragma once

// Batch front end. Exit codes: 0 success, 1 runtime invariant breach,
// 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace agile::cli {

inline constexpr int kOk = 0;
inline constexpr int kInvariant = 1;
inline constexpr int kUsage = 2;

/// Environment variable naming the default output directory ("out" if unset).
inline constexpr const char* kOutDirEnv = "AGILE_OUT_DIR";

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agile::cli
