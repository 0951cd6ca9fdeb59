#include <iostream>

#include "agile/cli.hpp"

int main(int argc, char** argv) {
    return agile::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
