#pragma once

// Measurements over simulation runs and over sprint activity logs.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agile/core.hpp"
#include "agile/simulation.hpp"

namespace agile::metrics {

// One completed task from a sprint activity log. Likert-scale fields use
// 0..10 except the two mood readings, which use 1..5.
struct SprintRecord {
    std::string task_id;
    std::string assignee_id;
    int sprint_index = 0;
    double difficulty = 0.0;
    double priority = 0.0;
    double confidence = 0.0;
    double estimated_days = 0.0;
    double actual_days = 0.0;
    double quality = 0.0;
    int collaborators = 1;
    double mood_begin = 1.0;
    double mood_end = 1.0;

    // Pass-through columns; absent in many logs.
    std::optional<std::string> team_id;
    std::optional<double> workload;
    std::optional<double> final_score;
    std::optional<double> team_score;
};

struct MetricSeries {
    std::string name;
    std::string unit;
    std::vector<double> values;  // index = day or sprint
};

/// Beta-reputation competence: difficulty-weighted evidence of on-time,
/// satisfactory (quality > 5) work versus late or poor work, Laplace
/// smoothed so that an empty history gives 0.5.
double competence(std::span<const SprintRecord> records, const std::string& agent);

/// Mean over the agent's sprints of the summed difficulty completed in each.
double technical_productivity(std::span<const SprintRecord> records, const std::string& agent);

/// Sum of squared queue lengths.
double congestion(std::span<const long> queue_sizes);

struct AllocationShares {
    std::map<AgentId, double> by_agent;
    std::map<Category, double> by_category;
};

/// Each agent's share of the total effort assigned over the run. Throws
/// InputError("no allocations") when nothing was assigned.
AllocationShares allocation_proportion(const sim::RunResult& result);
AllocationShares allocation_proportion(const std::map<AgentId, double>& workloads,
                                       const std::map<AgentId, Category>& categories = {});

/// Fraction of logged tasks that took longer than estimated. Throws
/// InputError when there are no records.
double delay_percentage(std::span<const SprintRecord> records);

/// Fraction of completed simulated tasks that finished later than the
/// assignee's nominal duration ceil(effort / max_effort), counted from arrival.
double delay_percentage(const sim::RunResult& result, const ScenarioConfig& config);

/// Population variance of the confidence values in `records`.
double confidence_variance(std::span<const SprintRecord> records);

/// Sample Pearson correlation. Throws InputError on a length mismatch,
/// fewer than two points, or zero variance in either series.
double pearson(std::span<const double> x, std::span<const double> y);

struct RowError {
    int row = 0;  // 1-based data row (header is row 0)
    std::string message;
};

struct IngestResult {
    std::vector<SprintRecord> records;
    std::vector<RowError> rejected;
};

/// Reads an activity-log CSV. Required header columns: task_id, assignee_id,
/// sprint_index, difficulty, priority, confidence, estimated_days,
/// actual_days, quality, collaborators, mood_begin, mood_end. Optional:
/// team_id, workload, final_score, team_score. Rows that fail to parse or
/// fall outside their scale are rejected with their row number. A missing
/// required column or an unreadable file throws InputError.
IngestResult ingest_log(const std::string& path);
IngestResult parse_log(const std::string& csv_text);

struct QueueBound {
    AgentId agent = 0;
    double first_half_max = 0.0;
    double second_half_max = 0.0;
};

struct BoundednessReport {
    std::vector<QueueBound> agents;
    double slack = 0.0;  // largest single-day arrival workload
    bool bounded = true;
};

/// Per-agent pending workload must not climb, in the second half of the
/// horizon, above its first-half peak plus one day's arrival workload.
BoundednessReport queue_boundedness(const sim::RunResult& result);

/// Peak pending workload of one agent over the run.
double peak_pending(const sim::RunResult& result, AgentId agent);

}  // namespace agile::metrics
