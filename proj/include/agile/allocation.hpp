#pragma once

// Task-acceptance planning: the per-agent SMART greedy planner, the
// accept-when-requested (AWR) baseline, and the quality/drift terms that
// score an acceptance decision.

#include <map>
#include <span>

#include "agile/core.hpp"

namespace agile::alloc {

/// Utility expected from letting an agent with competence C and mood M
/// perform a task worth u: u * C * M.
double expected_utility(double utility, double competence, double mood);

/// Pending-queue recursion: max(Q + admitted - served, 0).
long queue_update(long queue, long admitted, long served);

/// Drift contributed by admitting `admitted` tasks while serving `served`.
double drift(long admitted, long served);

/// psi * u * C * M - mu. Only strictly positive scores lead to acceptance.
double availability_score(double psi, double utility, double competence, double mood,
                          double service_rate);

struct TypeEconomics {
    TypeId type_id;
    double effort = 1.0;
    double expected_utility = 0.0;
    double availability_score = 0.0;
    double recent_service_rate = 0.0;
};

/// Scores every task type for one agent on one day. `service_rates` maps a
/// type to the agent's recent completions of it; absent types count as 0.
std::map<TypeId, TypeEconomics> economics_for(const AgentState& agent,
                                              std::span<const TaskTypeSpec> types,
                                              const std::map<TypeId, double>& service_rates,
                                              double psi);

struct AllocationPlan {
    std::map<TypeId, long> accepted;
    std::map<TypeId, long> rejected;
    double leftover_effort = 0.0;
    // Types in the order the planner visited them.
    std::vector<TypeId> visit_order;
};

/// One agent's acceptance plan for the offered task counts.
///
/// Starting from the agent's full daily effort budget, task types are
/// visited in descending availability score (ties by type id). A type with
/// a positive score takes as many of the offered tasks as still fit in the
/// remaining budget; a non-positive score takes none. Whatever is not
/// accepted is reported as rejected so the caller can return it to the
/// common queue.
///
/// Throws InputError when `incoming` names a type missing from `economics`
/// or carries a negative count, or when max_effort is not positive.
AllocationPlan smart_plan(const AgentState& agent, const std::map<TypeId, long>& incoming,
                          const std::map<TypeId, TypeEconomics>& economics);

/// Accept-when-requested: the task goes to the agent with the highest
/// competence for its type, whatever that agent's backlog. Ties go to the
/// lowest agent id. Throws InputError on an empty roster.
AgentId awr_assign(const TypeId& task_type, std::span<const AgentState> agents);

}  // namespace agile::alloc
