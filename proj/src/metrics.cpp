#include "agile/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace agile::metrics {

double competence(std::span<const SprintRecord> records, const std::string& agent) {
    double good = 0.0;
    double bad = 0.0;
    for (const auto& r : records) {
        if (r.assignee_id != agent) continue;
        const bool on_time = r.actual_days - r.estimated_days <= 0.0;
        if (on_time && r.quality > 5.0) {
            good += r.difficulty;
        } else {
            bad += r.difficulty;
        }
    }
    return (good + 1.0) / ((good + 1.0) + (bad + 1.0));
}

double technical_productivity(std::span<const SprintRecord> records, const std::string& agent) {
    std::map<int, double> per_sprint;
    for (const auto& r : records) {
        if (r.assignee_id == agent) per_sprint[r.sprint_index] += r.difficulty;
    }
    if (per_sprint.empty()) return 0.0;
    double total = 0.0;
    for (const auto& [sprint, d] : per_sprint) total += d;
    return total / static_cast<double>(per_sprint.size());
}

double congestion(std::span<const long> queue_sizes) {
    double l = 0.0;
    for (long q : queue_sizes) l += static_cast<double>(q) * static_cast<double>(q);
    return l;
}

AllocationShares allocation_proportion(const std::map<AgentId, double>& workloads,
                                       const std::map<AgentId, Category>& categories) {
    double total = 0.0;
    for (const auto& [id, w] : workloads) total += w;
    if (!(total > 0.0)) throw InputError("no allocations");
    AllocationShares out;
    for (const auto& [id, w] : workloads) {
        out.by_agent[id] = w / total;
        if (auto it = categories.find(id); it != categories.end()) out.by_category[it->second] += w / total;
    }
    return out;
}

AllocationShares allocation_proportion(const sim::RunResult& result) {
    std::map<AgentId, double> work;
    std::map<AgentId, Category> cats;
    for (std::size_t i = 0; i < result.agent_ids.size(); ++i) {
        work[result.agent_ids[i]] = 0.0;
        cats[result.agent_ids[i]] = result.categories[i];
    }
    for (const auto& day : result.assigned_workload) {
        for (std::size_t i = 0; i < day.size(); ++i) work[result.agent_ids[i]] += day[i];
    }
    return allocation_proportion(work, cats);
}

double delay_percentage(std::span<const SprintRecord> records) {
    if (records.empty()) throw InputError("no completed tasks");
    const auto late = std::count_if(records.begin(), records.end(),
                                    [](const SprintRecord& r) { return r.actual_days > r.estimated_days; });
    return static_cast<double>(late) / static_cast<double>(records.size());
}

double delay_percentage(const sim::RunResult& result, const ScenarioConfig& config) {
    long done = 0;
    long late = 0;
    for (const auto& t : result.tasks) {
        if (t.status != TaskStatus::completed) continue;
        const auto* spec = config.find_type(t.type_id);
        if (!spec) throw InputError("task type " + t.type_id + " not in scenario");
        const double emax = result.max_effort.at(static_cast<std::size_t>(*t.assignee));
        ++done;
        if (*t.completion_day - t.arrival_day + 1 > sim::nominal_days(spec->effort, emax)) ++late;
    }
    if (done == 0) throw InputError("no completed tasks");
    return static_cast<double>(late) / static_cast<double>(done);
}

double confidence_variance(std::span<const SprintRecord> records) {
    if (records.empty()) return 0.0;
    double mean = 0.0;
    for (const auto& r : records) mean += r.confidence;
    mean /= static_cast<double>(records.size());
    double ss = 0.0;
    for (const auto& r : records) ss += (r.confidence - mean) * (r.confidence - mean);
    return ss / static_cast<double>(records.size());
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InputError("pearson: series lengths differ");
    if (x.size() < 2) throw InputError("pearson: need at least two points");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx <= 0.0 || syy <= 0.0) throw InputError("pearson: zero variance, correlation undefined");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(std::move(cur));
    for (auto& f : out) {
        const auto b = f.find_first_not_of(" \t\r");
        const auto e = f.find_last_not_of(" \t\r");
        f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
    }
    return out;
}

double parse_number(const std::string& field, const std::string& column) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw InputError(column + ": not a number: '" + field + "'");
    }
    return v;
}

int parse_int(const std::string& field, const std::string& column) {
    const double v = parse_number(field, column);
    if (v != std::floor(v)) throw InputError(column + ": not an integer: '" + field + "'");
    return static_cast<int>(v);
}

void require_range(double v, double lo, double hi, const std::string& column) {
    if (v < lo || v > hi) {
        std::ostringstream msg;
        msg << column << " = " << v << " outside [" << lo << "," << hi << "]";
        throw InputError(msg.str());
    }
}

const std::vector<std::string> kRequired{"task_id",        "assignee_id", "sprint_index", "difficulty",
                                         "priority",       "confidence",  "estimated_days",
                                         "actual_days",    "quality",     "collaborators",
                                         "mood_begin",     "mood_end"};

}  // namespace

IngestResult parse_log(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line)) throw InputError("activity log is empty");
    const auto header = split_csv_line(line);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    std::vector<std::string> missing;
    for (const auto& name : kRequired) {
        if (!col.count(name)) missing.push_back(name);
    }
    if (!missing.empty()) {
        std::string msg = "activity log missing columns:";
        for (const auto& m : missing) msg += " " + m;
        throw InputError(msg);
    }

    IngestResult out;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto f = split_csv_line(line);
        auto get = [&](const std::string& name) -> const std::string& {
            const std::size_t i = col.at(name);
            if (i >= f.size()) throw InputError(name + ": missing field");
            return f[i];
        };
        auto optional_num = [&](const std::string& name) -> std::optional<double> {
            auto it = col.find(name);
            if (it == col.end() || it->second >= f.size() || f[it->second].empty()) return std::nullopt;
            return parse_number(f[it->second], name);
        };
        try {
            SprintRecord r;
            r.task_id = get("task_id");
            r.assignee_id = get("assignee_id");
            if (r.assignee_id.empty()) throw InputError("assignee_id: empty");
            r.sprint_index = parse_int(get("sprint_index"), "sprint_index");
            r.difficulty = parse_number(get("difficulty"), "difficulty");
            r.priority = parse_number(get("priority"), "priority");
            r.confidence = parse_number(get("confidence"), "confidence");
            r.estimated_days = parse_number(get("estimated_days"), "estimated_days");
            r.actual_days = parse_number(get("actual_days"), "actual_days");
            r.quality = parse_number(get("quality"), "quality");
            r.collaborators = parse_int(get("collaborators"), "collaborators");
            r.mood_begin = parse_number(get("mood_begin"), "mood_begin");
            r.mood_end = parse_number(get("mood_end"), "mood_end");

            require_range(r.difficulty, 0, 10, "difficulty");
            require_range(r.priority, 0, 10, "priority");
            require_range(r.confidence, 0, 10, "confidence");
            require_range(r.quality, 0, 10, "quality");
            require_range(r.mood_begin, 1, 5, "mood_begin");
            require_range(r.mood_end, 1, 5, "mood_end");
            if (r.actual_days < 0) throw InputError("actual_days < 0");
            if (r.estimated_days < 0) throw InputError("estimated_days < 0");
            if (r.collaborators < 1) throw InputError("collaborators < 1");
            if (r.sprint_index < 0) throw InputError("sprint_index < 0");

            if (auto it = col.find("team_id"); it != col.end() && it->second < f.size() && !f[it->second].empty()) {
                r.team_id = f[it->second];
            }
            r.workload = optional_num("workload");
            r.final_score = optional_num("final_score");
            r.team_score = optional_num("team_score");
            out.records.push_back(std::move(r));
        } catch (const InputError& e) {
            out.rejected.push_back({row, e.what()});
        }
    }
    return out;
}

IngestResult ingest_log(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open activity log: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_log(buf.str());
}

BoundednessReport queue_boundedness(const sim::RunResult& result) {
    BoundednessReport rep;
    if (!result.arrival_workload.empty()) {
        rep.slack = *std::max_element(result.arrival_workload.begin(), result.arrival_workload.end());
    }
    const std::size_t days = result.pending_workload.size();
    const std::size_t half = days / 2;
    for (std::size_t i = 0; i < result.agent_ids.size(); ++i) {
        QueueBound b;
        b.agent = result.agent_ids[i];
        for (std::size_t d = 0; d < days; ++d) {
            double& slot = d < half ? b.first_half_max : b.second_half_max;
            slot = std::max(slot, result.pending_workload[d][i]);
        }
        if (b.second_half_max > b.first_half_max + rep.slack) rep.bounded = false;
        rep.agents.push_back(b);
    }
    return rep;
}

double peak_pending(const sim::RunResult& result, AgentId agent) {
    const auto it = std::find(result.agent_ids.begin(), result.agent_ids.end(), agent);
    if (it == result.agent_ids.end()) throw InputError("unknown agent id");
    const auto i = static_cast<std::size_t>(it - result.agent_ids.begin());
    double peak = 0.0;
    for (const auto& day : result.pending_workload) peak = std::max(peak, day[i]);
    return peak;
}

}  // namespace agile::metrics
