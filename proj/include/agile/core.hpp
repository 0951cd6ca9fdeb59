#pragma once

// Domain types shared by the allocation, simulation and metrics layers,
// plus the catalog of preset team/task scenarios.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace agile {

// Bad input: unknown names, malformed files, violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownPresetError : public InputError {
public:
    explicit UnknownPresetError(const std::string& name)
        : InputError("unknown preset: " + name) {}
};

// A run detected a broken internal invariant (conservation, effort accounting).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using TypeId = std::string;
using AgentId = int;
using TaskId = int;

struct TaskTypeSpec {
    TypeId type_id;
    double priority = 0.0;
    double utility = 0.0;
    double effort = 1.0;

    bool operator==(const TaskTypeSpec&) const = default;
};

enum class TaskStatus { pending, assigned, completed };

struct TaskInstance {
    TaskId task_id = 0;
    TypeId type_id;
    int arrival_day = 0;
    std::optional<AgentId> assignee;
    std::optional<int> assigned_day;
    double remaining_effort = 0.0;
    TaskStatus status = TaskStatus::pending;
    std::optional<int> completion_day;
    std::optional<bool> quality_success;
};

enum class Category { HCA, MCA, MIA, HIA };

std::string_view to_string(Category c);
Category parse_category(std::string_view s);

struct AgentState {
    AgentId agent_id = 0;
    Category category = Category::HCA;
    double competence = 1.0;
    // Optional per-type override of the scalar competence.
    std::map<TypeId, double> competence_by_type;
    double mood = 1.0;
    double max_effort = 1.0;
    // Pending tasks in acceptance order; per-type queues are views over this.
    std::vector<TaskId> pending;
    double carryover_effort = 0.0;

    double competence_for(const TypeId& type) const;
};

struct CategorySpec {
    Category category = Category::HCA;
    int count = 0;
    double competence = 0.0;
    double max_effort = 0.0;

    bool operator==(const CategorySpec&) const = default;
};

struct TeamConfig {
    std::vector<CategorySpec> groups;

    int head_count() const;
    bool operator==(const TeamConfig&) const = default;
};

struct TaskMixEntry {
    TaskTypeSpec spec;
    int count = 0;

    bool operator==(const TaskMixEntry&) const = default;
};

enum class AllocatorKind { SMART, AWR };

std::string_view to_string(AllocatorKind a);
AllocatorKind parse_allocator(std::string_view s);

struct MoodMode {
    enum class Kind { constant, fcm_coupled };
    Kind kind = Kind::constant;
    double value = 1.0;

    bool operator==(const MoodMode&) const = default;
};

// Order in which an agent works through its own pending tasks.
enum class ServiceOrder { fifo, priority };

std::string_view to_string(ServiceOrder o);
ServiceOrder parse_service_order(std::string_view s);

struct ScenarioConfig {
    std::string name;
    TeamConfig team;
    std::vector<TaskMixEntry> task_mix;
    int horizon_days = 100;
    int repetitions = 10;
    std::uint64_t seed = 1;
    double psi = 1.0;
    AllocatorKind allocator = AllocatorKind::SMART;
    MoodMode mood_mode;
    ServiceOrder service_order = ServiceOrder::fifo;
    // Trailing days of completions feeding the service-rate estimate.
    int service_rate_window = 1;

    int total_tasks() const;
    const TaskTypeSpec* find_type(const TypeId& id) const;
    bool operator==(const ScenarioConfig&) const = default;
};

struct Violation {
    std::string path;
    std::string message;
};

// Every invariant violation in the config; empty means valid.
std::vector<Violation> check(const ScenarioConfig& config);

// Returns the config unchanged, or throws InputError listing all violations.
const ScenarioConfig& validate(const ScenarioConfig& config);

const std::vector<std::string>& preset_names();

// Team/task setups for the S/M/L x I/M/C experiment grid. Throws
// UnknownPresetError for anything outside preset_names().
ScenarioConfig preset(std::string_view name);

// Agents instantiated from a team config, ids assigned in group order.
std::vector<AgentState> make_agents(const TeamConfig& team);

void to_json(nlohmann::json& j, const ScenarioConfig& config);
void from_json(const nlohmann::json& j, ScenarioConfig& config);

ScenarioConfig load_scenario(const std::string& path);
void save_scenario(const ScenarioConfig& config, const std::string& path);

}  // namespace agile
