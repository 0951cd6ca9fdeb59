#include "agile/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "agile/core.hpp"
#include "agile/fcm.hpp"
#include "agile/goalnet.hpp"
#include "agile/metrics.hpp"
#include "agile/simulation.hpp"

namespace agile::cli {

namespace fs = std::filesystem;

namespace {

std::string default_out_dir() {
    const char* env = std::getenv(kOutDirEnv);
    return env && *env ? std::string(env) : std::string("out");
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw InputError("cannot create output directory " + dir.string());
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path.string());
    f << text;
    if (!f) throw InputError("write failed: " + path.string());
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// ---- simulate ------------------------------------------------------------

struct AllocatorRun {
    AllocatorKind allocator;
    sim::RepeatedResult result;
};

struct ScenarioRun {
    ScenarioConfig config;
    std::vector<AllocatorRun> runs;
};

std::string utility_csv(const AllocatorRun& ar) {
    std::ostringstream out;
    out << "day,run,allocator,cumulative_utility\n";
    for (std::size_t r = 0; r < ar.result.runs.size(); ++r) {
        const auto cum = ar.result.runs[r].cumulative_utility();
        for (std::size_t d = 0; d < cum.size(); ++d) {
            out << d << ',' << r + 1 << ',' << to_string(ar.allocator) << ',' << fmt(cum[d]) << '\n';
        }
    }
    return out.str();
}

// Mean share over runs; runs that assigned nothing contribute zero shares.
std::string allocation_csv(const AllocatorRun& ar) {
    const auto& first = ar.result.runs.front();
    std::vector<double> share(first.agent_ids.size(), 0.0);
    for (const auto& run : ar.result.runs) {
        try {
            const auto s = metrics::allocation_proportion(run);
            for (std::size_t i = 0; i < run.agent_ids.size(); ++i) share[i] += s.by_agent.at(run.agent_ids[i]);
        } catch (const InputError&) {
        }
    }
    std::ostringstream out;
    out << "agent,category,share\n";
    const double n = static_cast<double>(ar.result.runs.size());
    for (std::size_t i = 0; i < share.size(); ++i) {
        out << first.agent_ids[i] << ',' << to_string(first.categories[i]) << ',' << fmt(share[i] / n) << '\n';
    }
    return out.str();
}

std::string queues_csv(const AllocatorRun& ar) {
    const auto& runs = ar.result.runs;
    const auto& first = runs.front();
    const double n = static_cast<double>(runs.size());
    std::ostringstream out;
    out << "day,agent,pending_workload,congestion\n";
    for (std::size_t d = 0; d < first.pending_workload.size(); ++d) {
        double l = 0.0;
        for (const auto& r : runs) l += r.congestion[d];
        for (std::size_t i = 0; i < first.agent_ids.size(); ++i) {
            double p = 0.0;
            for (const auto& r : runs) p += r.pending_workload[d][i];
            out << d << ',' << first.agent_ids[i] << ',' << fmt(p / n) << ',' << fmt(l / n) << '\n';
        }
    }
    return out.str();
}

double mean_delay_fraction(const AllocatorRun& ar, const ScenarioConfig& cfg) {
    double sum = 0.0;
    int counted = 0;
    for (const auto& r : ar.result.runs) {
        if (r.completed == 0) continue;
        sum += metrics::delay_percentage(r, cfg);
        ++counted;
    }
    return counted ? sum / counted : 0.0;
}

const char* kSummaryHeader =
    "scenario,allocator,runs,mean_utility,sd_utility,mean_completed,sd_completed,mean_high_quality,"
    "sd_high_quality,mean_delayed,sd_delayed,mean_delay_fraction_nominal,mean_peak_congestion,"
    "sd_peak_congestion\n";

std::string summary_row(const ScenarioConfig& cfg, const AllocatorRun& ar) {
    const auto& r = ar.result;
    std::ostringstream out;
    out << cfg.name << ',' << to_string(ar.allocator) << ',' << r.runs.size() << ',' << fmt(r.global_utility.mean)
        << ',' << fmt(r.global_utility.stddev) << ',' << fmt(r.completed.mean) << ',' << fmt(r.completed.stddev)
        << ',' << fmt(r.high_quality.mean) << ',' << fmt(r.high_quality.stddev) << ',' << fmt(r.delay_count.mean)
        << ',' << fmt(r.delay_count.stddev) << ',' << fmt(mean_delay_fraction(ar, cfg)) << ','
        << fmt(r.peak_congestion.mean) << ',' << fmt(r.peak_congestion.stddev) << '\n';
    return out.str();
}

// Both allocators must have seen the same arrivals in every run.
void check_seed_parity(const ScenarioRun& sr) {
    const auto& a = sr.runs[0].result.runs;
    const auto& b = sr.runs[1].result.runs;
    if (a.size() != b.size()) throw InvariantError("compare: run counts differ");
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r].seed != b[r].seed || a[r].tasks.size() != b[r].tasks.size()) {
            throw InvariantError("compare: arrival schedules differ in run " + std::to_string(r + 1));
        }
        for (std::size_t t = 0; t < a[r].tasks.size(); ++t) {
            const auto& x = a[r].tasks[t];
            const auto& y = b[r].tasks[t];
            if (x.arrival_day != y.arrival_day || x.type_id != y.type_id) {
                throw InvariantError("compare: arrival schedules differ in run " + std::to_string(r + 1));
            }
        }
    }
}

const char* kCompareHeader =
    "scenario,runs,smart_mean_utility,smart_sd_utility,awr_mean_utility,awr_sd_utility,utility_gain,"
    "smart_mean_completed,awr_mean_completed,smart_mean_peak_congestion,awr_mean_peak_congestion\n";

std::string compare_row(const ScenarioRun& sr) {
    const auto& s = sr.runs[0].result;
    const auto& a = sr.runs[1].result;
    std::ostringstream out;
    out << sr.config.name << ',' << s.runs.size() << ',' << fmt(s.global_utility.mean) << ','
        << fmt(s.global_utility.stddev) << ',' << fmt(a.global_utility.mean) << ',' << fmt(a.global_utility.stddev)
        << ',' << fmt(s.global_utility.mean - a.global_utility.mean) << ',' << fmt(s.completed.mean) << ','
        << fmt(a.completed.mean) << ',' << fmt(s.peak_congestion.mean) << ',' << fmt(a.peak_congestion.mean) << '\n';
    return out.str();
}

// Cumulative utility, mean over runs, one polyline per allocator.
std::string utility_svg(const ScenarioRun& sr) {
    const double w = 640, h = 400, pad = 50;
    std::vector<std::vector<double>> curves;
    double ymax = 1.0;
    std::size_t days = 0;
    for (const auto& ar : sr.runs) {
        std::vector<double> mean;
        for (const auto& run : ar.result.runs) {
            const auto cum = run.cumulative_utility();
            if (mean.empty()) mean.assign(cum.size(), 0.0);
            for (std::size_t d = 0; d < cum.size(); ++d) mean[d] += cum[d] / static_cast<double>(ar.result.runs.size());
        }
        if (!mean.empty()) ymax = std::max(ymax, *std::max_element(mean.begin(), mean.end()));
        days = std::max(days, mean.size());
        curves.push_back(std::move(mean));
    }
    const char* colors[] = {"#1f77b4", "#d62728"};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << pad << "\" y=\"25\" font-family=\"sans-serif\" font-size=\"14\">" << sr.config.name
        << ": cumulative global utility (mean of " << sr.runs.front().result.runs.size() << " runs)</text>\n"
        << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\"" << h - pad
        << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << h - pad
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << pad - 5 << "\" y=\"" << pad << "\" font-family=\"sans-serif\" font-size=\"10\" "
        << "text-anchor=\"end\">" << fmt(ymax) << "</text>\n";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[c % 2] << "\" stroke-width=\"2\" points=\"";
        for (std::size_t d = 0; d < curves[c].size(); ++d) {
            const double x = pad + (w - 2 * pad) * (days > 1 ? static_cast<double>(d) / (days - 1) : 0.0);
            const double y = h - pad - (h - 2 * pad) * curves[c][d] / ymax;
            out << std::fixed << std::setprecision(1) << x << ',' << y << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << w - pad - 60 << "\" y=\"" << pad + 15 * (c + 1) << "\" fill=\"" << colors[c % 2]
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << to_string(sr.runs[c].allocator) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

ScenarioRun execute(ScenarioConfig cfg, const std::vector<AllocatorKind>& allocators) {
    ScenarioRun sr{cfg, {}};
    for (auto a : allocators) {
        cfg.allocator = a;
        sr.runs.push_back({a, sim::run_repeated(cfg)});
    }
    if (sr.runs.size() == 2) check_seed_parity(sr);
    return sr;
}

void write_outputs(const ScenarioRun& sr, const fs::path& dir, bool chart) {
    ensure_dir(dir);
    const bool compare = sr.runs.size() == 2;
    std::string summary = kSummaryHeader;
    for (const auto& ar : sr.runs) {
        const fs::path sub = compare ? dir / lower(std::string(to_string(ar.allocator))) : dir;
        ensure_dir(sub);
        write_file(sub / "utility.csv", utility_csv(ar));
        write_file(sub / "allocation.csv", allocation_csv(ar));
        write_file(sub / "queues.csv", queues_csv(ar));
        summary += summary_row(sr.config, ar);
    }
    write_file(dir / "summary.csv", summary);
    if (compare) write_file(dir / "compare.csv", std::string(kCompareHeader) + compare_row(sr));
    if (chart) write_file(dir / "utility.svg", utility_svg(sr));
}

struct SimulateArgs {
    std::string preset;
    std::string scenario;
    bool all_presets = false;
    bool compare = false;
    std::string allocator;
    std::optional<std::uint64_t> seed;
    std::optional<int> repetitions;
    std::string out_dir;
    bool chart = false;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    const int sources = (!a.preset.empty()) + (!a.scenario.empty()) + (a.all_presets ? 1 : 0);
    if (sources != 1) throw InputError("give exactly one of --preset, --scenario, --all-presets");

    std::vector<ScenarioConfig> configs;
    if (a.all_presets) {
        for (const auto& name : preset_names()) configs.push_back(preset(name));
    } else if (!a.preset.empty()) {
        configs.push_back(preset(a.preset));
    } else {
        configs.push_back(load_scenario(a.scenario));
    }
    for (auto& c : configs) {
        if (a.seed) c.seed = *a.seed;
        if (a.repetitions) c.repetitions = *a.repetitions;
        if (!a.allocator.empty()) c.allocator = parse_allocator(a.allocator);
    }

    std::vector<std::future<ScenarioRun>> jobs;
    for (const auto& c : configs) {
        const std::vector<AllocatorKind> allocs =
            a.compare ? std::vector<AllocatorKind>{AllocatorKind::SMART, AllocatorKind::AWR}
                      : std::vector<AllocatorKind>{c.allocator};
        jobs.push_back(std::async(std::launch::async, execute, c, allocs));
    }
    // Single collector: every file is written from this thread, in preset order.
    const fs::path root = a.out_dir.empty() ? fs::path(default_out_dir()) : fs::path(a.out_dir);
    std::string combined = kCompareHeader;
    for (auto& j : jobs) {
        const ScenarioRun sr = j.get();
        const fs::path dir = a.all_presets ? root / sr.config.name : root;
        write_outputs(sr, dir, a.chart);
        if (a.compare) {
            const auto& s = sr.runs[0].result.global_utility;
            const auto& w = sr.runs[1].result.global_utility;
            combined += compare_row(sr);
            out << sr.config.name << ": SMART mean utility " << fmt(s.mean) << " (sd " << fmt(s.stddev)
                << "), AWR " << fmt(w.mean) << " (sd " << fmt(w.stddev) << ")"
                << (s.mean > w.mean ? ", SMART ahead" : ", SMART not ahead") << '\n';
        } else {
            const auto& r = sr.runs[0].result;
            out << sr.config.name << " [" << to_string(sr.runs[0].allocator) << "]: mean utility "
                << fmt(r.global_utility.mean) << " (sd " << fmt(r.global_utility.stddev) << ") over "
                << r.runs.size() << " runs\n";
        }
    }
    if (a.all_presets && a.compare) write_file(root / "compare.csv", combined);
    out << "wrote " << root.string() << '\n';
    return kOk;
}

// ---- fcm -----------------------------------------------------------------

std::vector<double> parse_vector(const std::string& text) {
    std::vector<double> v;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InputError("empty value in --initial");
        item = item.substr(b, e - b + 1);
        double x = 0.0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (ec != std::errc() || ptr != item.data() + item.size()) throw InputError("not a number: " + item);
        v.push_back(x);
    }
    return v;
}

struct FcmArgs {
    std::string map;
    std::string initial;
    std::string transform;
    double c = 5.0;
    int max_iter = 200;
    double tol = 1e-6;
    int iterations = 0;
    std::string out_path;
};

int cmd_fcm(const FcmArgs& a, std::ostream& out) {
    const auto& names = fcm::bundled_map_names();
    const bool bundled = std::find(names.begin(), names.end(), a.map) != names.end() && !fs::exists(a.map);
    fcm::ConceptMap map = bundled ? fcm::bundled_map(a.map) : fcm::load_map(a.map);
    if (!a.transform.empty()) {
        map = map.with_transform({fcm::parse_transform(a.transform), a.c});
    } else if (a.c != 5.0) {
        map = map.with_transform({map.transform().kind, a.c});
    }

    fcm::StateVector init;
    if (!a.initial.empty()) {
        init.values = parse_vector(a.initial);
    } else if (bundled) {
        init = fcm::bundled_initial(a.map);
    } else {
        throw InputError("--initial is required for map files");
    }
    if (init.values.size() != map.size()) {
        throw InputError("initial state has " + std::to_string(init.values.size()) + " values, map has " +
                         std::to_string(map.size()) + " concepts");
    }
    if (a.max_iter < 1) throw InputError("--max-iter must be >= 1");

    const fcm::Trajectory traj = a.iterations > 0 ? fcm::run_fixed(map, init, a.iterations, a.tol)
                                                  : fcm::run(map, init, {a.max_iter, a.tol});
    const std::string csv = fcm::trajectory_csv(map, traj);
    if (a.out_path.empty()) {
        out << csv;
    } else {
        write_file(a.out_path, csv);
    }

    // Report the state where the verdict was reached.
    const fcm::StateVector* verdict = &traj.final_state();
    if (traj.terminal == fcm::Terminal::fixed_point && a.iterations > 0) {
        for (std::size_t k = 1; k < traj.states.size(); ++k) {
            double change = 0.0;
            for (std::size_t i = 0; i < map.size(); ++i) {
                change = std::max(change, std::abs(traj.states[k].values[i] - traj.states[k - 1].values[i]));
            }
            if (change < a.tol) {
                verdict = &traj.states[k];
                break;
            }
        }
    }
    // A fixed point is printed as the limit the iteration settles on, which
    // can differ from the detection state in the last printed digit.
    std::vector<double> shown = verdict->values;
    if (traj.terminal == fcm::Terminal::fixed_point) {
        fcm::StateVector s = *verdict;
        for (int k = 0; k < 10000; ++k) {
            fcm::StateVector next = fcm::step(map, s);
            double change = 0.0;
            for (std::size_t i = 0; i < map.size(); ++i) change = std::max(change, std::abs(next.values[i] - s.values[i]));
            s = std::move(next);
            if (change < 1e-13) break;
        }
        shown = s.values;
    }
    out << to_string(traj.terminal) << " at iteration " << verdict->iteration;
    if (traj.cycle_start) out << " (cycle back to iteration " << *traj.cycle_start << ")";
    out << ": (";
    out << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < shown.size(); ++i) {
        out << (i ? ", " : "") << map.labels()[i] << '=' << shown[i];
    }
    out << ")\n";
    out.unsetf(std::ios::floatfield);
    return kOk;
}

// ---- goalnet -------------------------------------------------------------

struct GoalnetArgs {
    std::string stories;
    std::string goals;
    std::string out_dir;
};

int cmd_goalnet(const GoalnetArgs& a, std::ostream& out) {
    const auto stories = goalnet::load_stories(a.stories);
    const auto spec = goalnet::load_goal_spec(a.goals);
    const auto net = goalnet::build_goal_net(stories, spec.high_level_goals, spec.assignment, spec.options);
    const auto violations = goalnet::validate_net(net);
    if (!violations.empty()) {
        std::string msg = "goal net failed validation:";
        for (const auto& v : violations) msg += "\n  " + v.path + ": " + v.message;
        throw InputError(msg);
    }
    const fs::path dir = a.out_dir.empty() ? fs::path(default_out_dir()) : fs::path(a.out_dir);
    ensure_dir(dir);
    write_file(dir / "goalnet.json", goalnet::to_json(net).dump(2) + "\n");
    write_file(dir / "goalnet.dot", goalnet::to_dot(net));
    out << "stories " << stories.size() << ", nodes " << net.nodes.size() << ", transitions "
        << net.transitions.size() << ", levels " << net.levels() << ", GET cards " << net.cards.size() << '\n';
    out << "wrote " << (dir / "goalnet.json").string() << " and " << (dir / "goalnet.dot").string() << '\n';
    return kOk;
}

// ---- presets -------------------------------------------------------------

int cmd_presets(const std::string& out_dir, std::ostream& out) {
    if (out_dir.empty()) {
        for (const auto& name : preset_names()) out << name << '\n';
        return kOk;
    }
    ensure_dir(out_dir);
    for (const auto& name : preset_names()) save_scenario(preset(name), (fs::path(out_dir) / (name + ".json")).string());
    out << "wrote " << preset_names().size() << " scenarios to " << out_dir << '\n';
    return kOk;
}

// ---- ingest --------------------------------------------------------------

std::optional<double> field(const metrics::SprintRecord& r, const std::string& name) {
    if (name == "difficulty") return r.difficulty;
    if (name == "priority") return r.priority;
    if (name == "confidence") return r.confidence;
    if (name == "estimated_days") return r.estimated_days;
    if (name == "actual_days") return r.actual_days;
    if (name == "quality") return r.quality;
    if (name == "collaborators") return r.collaborators;
    if (name == "mood_begin") return r.mood_begin;
    if (name == "mood_end") return r.mood_end;
    if (name == "sprint_index") return r.sprint_index;
    if (name == "workload") return r.workload;
    if (name == "final_score") return r.final_score;
    if (name == "team_score") return r.team_score;
    throw InputError("unknown column for correlation: " + name);
}

struct IngestArgs {
    std::string log;
    std::vector<std::string> correlate;
    std::string out_dir;
};

int cmd_ingest(const IngestArgs& a, std::ostream& out, std::ostream& err) {
    std::ifstream in(a.log, std::ios::binary);
    if (!in) throw InputError("cannot open activity log: " + a.log);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw InputError("no records in " + a.log);

    const auto res = metrics::parse_log(text);
    for (const auto& e : res.rejected) err << "row " << e.row << ": " << e.message << '\n';
    if (res.records.empty()) throw InputError("no records in " + a.log);

    std::vector<std::string> agents;
    for (const auto& r : res.records) {
        if (std::find(agents.begin(), agents.end(), r.assignee_id) == agents.end()) agents.push_back(r.assignee_id);
    }
    std::sort(agents.begin(), agents.end());

    std::ostringstream table;
    table << "agent,tasks,competence,technical_productivity\n";
    for (const auto& id : agents) {
        const auto n = std::count_if(res.records.begin(), res.records.end(),
                                     [&](const auto& r) { return r.assignee_id == id; });
        table << id << ',' << n << ',' << fmt(metrics::competence(res.records, id)) << ','
              << fmt(metrics::technical_productivity(res.records, id)) << '\n';
    }

    std::ostringstream corr;
    corr << "x,y,n,pearson\n";
    for (const auto& pair : a.correlate) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos) throw InputError("--correlate expects x:y, got " + pair);
        const std::string xn = pair.substr(0, colon), yn = pair.substr(colon + 1);
        std::vector<double> xs, ys;
        for (const auto& r : res.records) {
            const auto x = field(r, xn);
            const auto y = field(r, yn);
            if (x && y) {
                xs.push_back(*x);
                ys.push_back(*y);
            }
        }
        corr << xn << ',' << yn << ',' << xs.size() << ',' << fmt(metrics::pearson(xs, ys)) << '\n';
    }

    out << "records " << res.records.size() << ", rejected " << res.rejected.size() << ", agents "
        << agents.size() << '\n';
    out << table.str();
    out << "delay_percentage," << fmt(metrics::delay_percentage(res.records)) << '\n';
    out << "confidence_variance," << fmt(metrics::confidence_variance(res.records)) << '\n';
    if (!a.correlate.empty()) out << corr.str();

    if (!a.out_dir.empty()) {
        const fs::path dir(a.out_dir);
        ensure_dir(dir);
        write_file(dir / "competence.csv", table.str());
        std::ostringstream summary;
        summary << "metric,value\n"
                << "records," << res.records.size() << "\n"
                << "rejected," << res.rejected.size() << "\n"
                << "delay_percentage," << fmt(metrics::delay_percentage(res.records)) << "\n"
                << "confidence_variance," << fmt(metrics::confidence_variance(res.records)) << "\n";
        write_file(dir / "log_summary.csv", summary.str());
        if (!a.correlate.empty()) write_file(dir / "correlations.csv", corr.str());
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multi-agent agile task allocation: simulation, mood maps, goal nets, sprint-log metrics",
                 "agile-sim"};
    app.require_subcommand(1);

    SimulateArgs sa;
    auto* sim = app.add_subcommand("simulate", "Run a scenario and write utility/allocation/queue CSVs");
    sim->add_option("--preset", sa.preset, "Preset name (S-I, S-M, S-C, M-I, M-M, M-C, L-I, L-M, L-C)");
    sim->add_option("--scenario", sa.scenario, "Scenario JSON file");
    sim->add_flag("--all-presets", sa.all_presets, "Run all nine presets, one subdirectory each");
    sim->add_flag("--compare", sa.compare, "Run SMART and AWR on identical seeds");
    sim->add_option("--allocator", sa.allocator, "smart or awr (ignored with --compare)");
    sim->add_option("--seed", sa.seed, "Base seed; repetition r uses seed + r");
    sim->add_option("--repetitions", sa.repetitions, "Number of seeded repetitions");
    sim->add_option("--out", sa.out_dir, std::string("Output directory (default $") + kOutDirEnv + " or ./out)");
    sim->add_flag("--chart", sa.chart, "Also write utility.svg");

    FcmArgs fa;
    auto* f = app.add_subcommand("fcm", "Iterate a fuzzy cognitive map and report its terminal state");
    f->add_option("map", fa.map, "Map JSON file or bundled map name")->required();
    f->add_option("--initial", fa.initial, "Comma-separated initial state");
    f->add_option("--transform", fa.transform, "sigmoid, bivalent or trivalent");
    f->add_option("--c", fa.c, "Sigmoid steepness");
    f->add_option("--max-iter", fa.max_iter, "Iteration cap");
    f->add_option("--tol", fa.tol, "Convergence tolerance (max-norm)");
    f->add_option("--iterations", fa.iterations, "Run exactly this many steps");
    f->add_option("--out", fa.out_path, "Trajectory CSV path (default stdout)");

    GoalnetArgs ga;
    auto* g = app.add_subcommand("goalnet", "Build and validate a goal net from user stories");
    g->add_option("stories", ga.stories, "Story corpus (JSON or '<id> | <story>' text)")->required();
    g->add_option("goals", ga.goals, "Goals JSON file")->required();
    g->add_option("--out", ga.out_dir, "Output directory for goalnet.json and goalnet.dot");

    IngestArgs ia;
    auto* ing = app.add_subcommand("ingest", "Compute competence and productivity from a sprint activity log");
    ing->add_option("log", ia.log, "Activity-log CSV")->required();
    ing->add_option("--correlate", ia.correlate, "Column pair x:y for a Pearson correlation (repeatable)");
    ing->add_option("--out", ia.out_dir, "Also write CSV reports here");

    std::string presets_out;
    auto* pr = app.add_subcommand("presets", "List the preset scenarios, or export them as JSON");
    pr->add_option("--out", presets_out, "Write <name>.json for every preset into this directory");

    std::vector<std::string> storage{"agile-sim"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sa, out);
        if (f->parsed()) return cmd_fcm(fa, out);
        if (g->parsed()) return cmd_goalnet(ga, out);
        if (ing->parsed()) return cmd_ingest(ia, out, err);
        if (pr->parsed()) return cmd_presets(presets_out, out);
    } catch (const InvariantError& e) {
        err << "invariant breach: " << e.what() << '\n';
        return kInvariant;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvariant;
    }
    return kUsage;
}

}  // namespace agile::cli
