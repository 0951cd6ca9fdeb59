#pragma once

// Discrete-time team simulator. Each day: admit arrivals to the common
// queue, let the allocator hand tasks to agents, have every agent work
// through its own queue, draw quality outcomes, update moods, record.

#include <cstdint>
#include <random>
#include <vector>

#include "agile/core.hpp"

namespace agile::sim {

/// Every configured task with its arrival day. Arrivals are paced evenly
/// (floor or ceil of N/T per day), types interleaved in proportion to their
/// counts, and the order within a day shuffled by a generator derived from
/// `seed`. Task ids follow arrival order.
std::vector<TaskInstance> generate_arrivals(const ScenarioConfig& config, std::uint64_t seed);

/// Nominal days an agent with `max_effort` needs for `effort` of work.
int nominal_days(double effort, double max_effort);

struct RunResult {
    AllocatorKind allocator = AllocatorKind::SMART;
    std::uint64_t seed = 0;
    int horizon = 0;

    std::vector<AgentId> agent_ids;
    std::vector<Category> categories;
    std::vector<double> max_effort;

    // Per-day series; agent-indexed series are [day][agent].
    std::vector<std::vector<double>> assigned_workload;
    std::vector<std::vector<double>> busy_effort;
    std::vector<std::vector<double>> pending_workload;
    std::vector<std::vector<int>> queue_sizes;
    std::vector<std::vector<double>> mood;
    std::vector<int> common_queue_size;
    std::vector<double> congestion;
    std::vector<double> arrival_workload;
    std::vector<int> completions;
    std::vector<int> high_quality;
    std::vector<int> delayed;
    std::vector<double> utility;

    double global_utility = 0.0;
    int completed = 0;
    int high_quality_count = 0;
    int delay_count = 0;

    // Final state of every task, indexed by task id.
    std::vector<TaskInstance> tasks;

    std::vector<double> cumulative_utility() const;
};

/// Mutable run state. Owned by one run, never shared.
struct SimState {
    int day = 0;
    std::vector<TaskInstance> tasks;
    std::vector<std::vector<TaskId>> arrivals_by_day;
    std::vector<TaskId> common_queue;
    std::vector<AgentState> agents;
    std::vector<TaskId> completed;
    std::vector<double> received_effort;
    // Per agent, per day: completions by type.
    std::vector<std::vector<std::map<TypeId, int>>> completion_history;
    // Per agent FCM node values (Mood, Progress, Quality) in fcm-coupled mode.
    std::vector<std::vector<double>> mood_nodes;
    std::mt19937_64 rng;
    int arrived = 0;
    RunResult result;
};

SimState initial_state(const ScenarioConfig& config, std::uint64_t seed);

/// Advances one day. Throws InvariantError if task conservation or effort
/// accounting breaks; throws InputError if the horizon is already reached.
void tick(SimState& state, const ScenarioConfig& config);

/// Full run with config.seed, from an empty state. Validates the config.
RunResult run(const ScenarioConfig& config);
RunResult run(const ScenarioConfig& config, std::uint64_t seed);

struct Summary {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation; 0 for a single run
};

Summary summarize(const std::vector<double>& values);

struct RepeatedResult {
    std::vector<RunResult> runs;
    Summary global_utility;
    Summary completed;
    Summary high_quality;
    Summary delay_count;
    Summary peak_congestion;
};

/// `config.repetitions` runs with seeds seed, seed+1, ...; runs execute on
/// worker threads but results are ordered by seed and bit-reproducible.
RepeatedResult run_repeated(const ScenarioConfig& config);

}  // namespace agile::sim
