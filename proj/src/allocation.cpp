#include "agile/allocation.hpp"

#include <algorithm>
#include <cmath>

namespace agile::alloc {

double expected_utility(double utility, double competence, double mood) {
    return utility * competence * mood;
}

long queue_update(long queue, long admitted, long served) {
    return std::max(queue + admitted - served, 0L);
}

double drift(long admitted, long served) {
    return static_cast<double>(admitted) * static_cast<double>(served);
}

double availability_score(double psi, double utility, double competence, double mood,
                          double service_rate) {
    return psi * expected_utility(utility, competence, mood) - service_rate;
}

std::map<TypeId, TypeEconomics> economics_for(const AgentState& agent,
                                              std::span<const TaskTypeSpec> types,
                                              const std::map<TypeId, double>& service_rates,
                                              double psi) {
    std::map<TypeId, TypeEconomics> out;
    for (const auto& t : types) {
        TypeEconomics e;
        e.type_id = t.type_id;
        e.effort = t.effort;
        const double c = agent.competence_for(t.type_id);
        auto it = service_rates.find(t.type_id);
        e.recent_service_rate = it == service_rates.end() ? 0.0 : it->second;
        e.expected_utility = expected_utility(t.utility, c, agent.mood);
        e.availability_score = availability_score(psi, t.utility, c, agent.mood, e.recent_service_rate);
        out.emplace(t.type_id, e);
    }
    return out;
}

AllocationPlan smart_plan(const AgentState& agent, const std::map<TypeId, long>& incoming,
                          const std::map<TypeId, TypeEconomics>& economics) {
    if (!(agent.max_effort > 0.0)) throw InputError("agent max_effort must be > 0");

    std::vector<const TypeEconomics*> order;
    for (const auto& [type, count] : incoming) {
        auto it = economics.find(type);
        if (it == economics.end()) throw InputError("no economics for task type " + type);
        if (count < 0) throw InputError("negative incoming count for task type " + type);
        order.push_back(&it->second);
    }
    // Visit key is the availability score: the acceptance counts being
    // planned cannot order their own computation.
    std::stable_sort(order.begin(), order.end(), [](const TypeEconomics* a, const TypeEconomics* b) {
        if (a->availability_score != b->availability_score) {
            return a->availability_score > b->availability_score;
        }
        return a->type_id < b->type_id;
    });

    AllocationPlan plan;
    double budget = agent.max_effort;
    for (const TypeEconomics* e : order) {
        const long offered = incoming.at(e->type_id);
        long take = 0;
        if (e->availability_score > 0.0) {
            if (static_cast<double>(offered) * e->effort <= budget) {
                take = offered;
            } else {
                take = static_cast<long>(std::floor(budget / e->effort));
                while (take > 0 && static_cast<double>(take) * e->effort > budget) --take;
            }
            budget -= static_cast<double>(take) * e->effort;
        }
        plan.accepted[e->type_id] = take;
        plan.rejected[e->type_id] = offered - take;
        plan.visit_order.push_back(e->type_id);
    }
    plan.leftover_effort = budget;
    return plan;
}

AgentId awr_assign(const TypeId& task_type, std::span<const AgentState> agents) {
    if (agents.empty()) throw InputError("awr_assign: no agents");
    const AgentState* best = &agents.front();
    for (const auto& a : agents) {
        const double ca = a.competence_for(task_type);
        const double cb = best->competence_for(task_type);
        if (ca > cb || (ca == cb && a.agent_id < best->agent_id)) best = &a;
    }
    return best->agent_id;
}

}  // namespace agile::alloc
