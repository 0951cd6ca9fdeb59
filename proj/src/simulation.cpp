#include "agile/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <sstream>

#include "agile/allocation.hpp"
#include "agile/fcm.hpp"

namespace agile::sim {

namespace {

constexpr double kEffortEps = 1e-9;

// Stream separation: arrivals and quality draws use independent generators
// so that changing the allocator never changes the arrival schedule.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t kArrivalStream = 0xA11A11A1ULL;
constexpr std::uint64_t kQualityStream = 0x0C0FFEEULL;

// Unbiased index in [0, n) from raw generator output; libstdc++ and libc++
// disagree on std::uniform_int_distribution, so draws are done by hand.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

bool bernoulli(std::mt19937_64& rng, double p) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_index(rng, i)]);
    }
}

const TaskTypeSpec& spec_of(const ScenarioConfig& c, const TypeId& id) {
    const TaskTypeSpec* s = c.find_type(id);
    if (!s) throw InvariantError("task references unknown type " + id);
    return *s;
}

}  // namespace

int nominal_days(double effort, double max_effort) {
    return static_cast<int>(std::ceil(effort / max_effort - kEffortEps));
}

std::vector<TaskInstance> generate_arrivals(const ScenarioConfig& config, std::uint64_t seed) {
    struct Slot {
        double position;
        std::size_t type_index;
        int k;
    };
    std::vector<Slot> slots;
    for (std::size_t t = 0; t < config.task_mix.size(); ++t) {
        const int n = config.task_mix[t].count;
        for (int k = 0; k < n; ++k) slots.push_back({(k + 0.5) / n, t, k});
    }
    std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        if (a.position != b.position) return a.position < b.position;
        return a.type_index < b.type_index;
    });

    const long total = static_cast<long>(slots.size());
    const long horizon = config.horizon_days;
    std::vector<std::vector<std::size_t>> by_day(static_cast<std::size_t>(horizon));
    for (long g = 0; g < total; ++g) {
        by_day[static_cast<std::size_t>(g * horizon / total)].push_back(slots[g].type_index);
    }

    std::mt19937_64 rng(splitmix64(seed ^ kArrivalStream));
    std::vector<TaskInstance> out;
    out.reserve(slots.size());
    for (long d = 0; d < horizon; ++d) {
        auto& day = by_day[static_cast<std::size_t>(d)];
        shuffle(day, rng);
        for (std::size_t t : day) {
            const auto& spec = config.task_mix[t].spec;
            TaskInstance task;
            task.task_id = static_cast<TaskId>(out.size());
            task.type_id = spec.type_id;
            task.arrival_day = static_cast<int>(d);
            task.remaining_effort = spec.effort;
            out.push_back(std::move(task));
        }
    }
    return out;
}

std::vector<double> RunResult::cumulative_utility() const {
    std::vector<double> out(utility.size());
    std::partial_sum(utility.begin(), utility.end(), out.begin());
    return out;
}

SimState initial_state(const ScenarioConfig& config, std::uint64_t seed) {
    SimState s;
    s.tasks = generate_arrivals(config, seed);
    s.arrivals_by_day.resize(static_cast<std::size_t>(config.horizon_days));
    for (const auto& t : s.tasks) s.arrivals_by_day[static_cast<std::size_t>(t.arrival_day)].push_back(t.task_id);
    s.agents = make_agents(config.team);
    const double initial_mood =
        config.mood_mode.kind == MoodMode::Kind::constant ? config.mood_mode.value : 1.0;
    for (auto& a : s.agents) a.mood = initial_mood;
    s.received_effort.assign(s.tasks.size(), 0.0);
    s.completion_history.assign(s.agents.size(), {});
    if (config.mood_mode.kind == MoodMode::Kind::fcm_coupled) {
        s.mood_nodes.assign(s.agents.size(), {initial_mood, 1.0, 1.0});
    }
    s.rng.seed(splitmix64(seed ^ kQualityStream));

    auto& r = s.result;
    r.allocator = config.allocator;
    r.seed = seed;
    r.horizon = config.horizon_days;
    for (const auto& a : s.agents) {
        r.agent_ids.push_back(a.agent_id);
        r.categories.push_back(a.category);
        r.max_effort.push_back(a.max_effort);
    }
    return s;
}

namespace {

std::map<TypeId, double> service_rates(const SimState& s, std::size_t agent, int window) {
    std::map<TypeId, double> rates;
    const auto& hist = s.completion_history[agent];
    const int n = static_cast<int>(hist.size());
    for (int d = std::max(0, n - window); d < n; ++d) {
        for (const auto& [type, count] : hist[static_cast<std::size_t>(d)]) rates[type] += count;
    }
    for (auto& [type, v] : rates) v /= window;
    return rates;
}

void allocate_smart(SimState& s, const ScenarioConfig& c, std::vector<double>& assigned) {
    std::vector<TaskTypeSpec> types;
    for (const auto& m : c.task_mix) types.push_back(m.spec);

    for (std::size_t i = 0; i < s.agents.size() && !s.common_queue.empty(); ++i) {
        auto& agent = s.agents[i];
        std::map<TypeId, long> offered;
        for (TaskId id : s.common_queue) ++offered[s.tasks[static_cast<std::size_t>(id)].type_id];

        const auto econ = alloc::economics_for(agent, types, service_rates(s, i, c.service_rate_window), c.psi);
        auto plan = alloc::smart_plan(agent, offered, econ);

        // Claim accepted tasks in common-queue order.
        std::vector<TaskId> keep;
        keep.reserve(s.common_queue.size());
        for (TaskId id : s.common_queue) {
            auto& task = s.tasks[static_cast<std::size_t>(id)];
            long& quota = plan.accepted[task.type_id];
            if (quota > 0) {
                --quota;
                task.status = TaskStatus::assigned;
                task.assignee = agent.agent_id;
                task.assigned_day = s.day;
                agent.pending.push_back(id);
                assigned[i] += spec_of(c, task.type_id).effort;
            } else {
                keep.push_back(id);
            }
        }
        s.common_queue = std::move(keep);
    }
}

void allocate_awr(SimState& s, const ScenarioConfig& c, std::vector<double>& assigned) {
    for (TaskId id : s.common_queue) {
        auto& task = s.tasks[static_cast<std::size_t>(id)];
        const AgentId who = alloc::awr_assign(task.type_id, s.agents);
        auto& agent = s.agents[static_cast<std::size_t>(who)];
        task.status = TaskStatus::assigned;
        task.assignee = who;
        task.assigned_day = s.day;
        agent.pending.push_back(id);
        assigned[static_cast<std::size_t>(who)] += spec_of(c, task.type_id).effort;
    }
    s.common_queue.clear();
}

}  // namespace

void tick(SimState& s, const ScenarioConfig& c) {
    if (s.day >= c.horizon_days) throw InputError("simulation horizon already reached");
    const std::size_t n_agents = s.agents.size();
    auto& r = s.result;

    // 1. admit arrivals, keep the common queue ordered by priority then arrival
    double arrival_work = 0.0;
    for (TaskId id : s.arrivals_by_day[static_cast<std::size_t>(s.day)]) {
        s.common_queue.push_back(id);
        arrival_work += spec_of(c, s.tasks[static_cast<std::size_t>(id)].type_id).effort;
        ++s.arrived;
    }
    std::stable_sort(s.common_queue.begin(), s.common_queue.end(), [&](TaskId a, TaskId b) {
        const auto& ta = s.tasks[static_cast<std::size_t>(a)];
        const auto& tb = s.tasks[static_cast<std::size_t>(b)];
        const double pa = spec_of(c, ta.type_id).priority;
        const double pb = spec_of(c, tb.type_id).priority;
        if (pa != pb) return pa > pb;
        if (ta.arrival_day != tb.arrival_day) return ta.arrival_day < tb.arrival_day;
        return a < b;
    });

    // 2. allocation
    std::vector<double> assigned(n_agents, 0.0);
    if (c.allocator == AllocatorKind::SMART) {
        allocate_smart(s, c, assigned);
    } else {
        allocate_awr(s, c, assigned);
    }

    // 3-4. service and quality outcomes
    std::vector<double> busy(n_agents, 0.0);
    int day_completed = 0;
    int day_quality = 0;
    int day_delayed = 0;
    double day_utility = 0.0;
    std::vector<int> agent_done(n_agents, 0), agent_on_time(n_agents, 0), agent_good(n_agents, 0);

    for (std::size_t i = 0; i < n_agents; ++i) {
        auto& agent = s.agents[i];
        std::map<TypeId, int> done_today;
        if (c.service_order == ServiceOrder::priority) {
            std::stable_sort(agent.pending.begin(), agent.pending.end(), [&](TaskId a, TaskId b) {
                return spec_of(c, s.tasks[static_cast<std::size_t>(a)].type_id).priority >
                       spec_of(c, s.tasks[static_cast<std::size_t>(b)].type_id).priority;
            });
        }
        double budget = agent.max_effort;
        std::size_t served = 0;
        while (served < agent.pending.size() && budget > kEffortEps) {
            const TaskId id = agent.pending[served];
            auto& task = s.tasks[static_cast<std::size_t>(id)];
            const auto& spec = spec_of(c, task.type_id);
            const double work = std::min(budget, task.remaining_effort);
            budget -= work;
            busy[i] += work;
            task.remaining_effort -= work;
            s.received_effort[static_cast<std::size_t>(id)] += work;
            if (task.remaining_effort > kEffortEps) break;

            if (std::abs(s.received_effort[static_cast<std::size_t>(id)] - spec.effort) > 1e-6) {
                std::ostringstream msg;
                msg << "task " << id << " completed with effort " << s.received_effort[static_cast<std::size_t>(id)]
                    << " != " << spec.effort;
                throw InvariantError(msg.str());
            }
            task.remaining_effort = 0.0;
            task.status = TaskStatus::completed;
            task.completion_day = s.day;
            task.quality_success = bernoulli(s.rng, agent.competence_for(task.type_id));
            s.completed.push_back(id);
            ++served;

            ++day_completed;
            ++agent_done[i];
            ++done_today[task.type_id];
            const bool late = s.day - task.arrival_day + 1 > nominal_days(spec.effort, agent.max_effort);
            if (late) {
                ++day_delayed;
            } else {
                ++agent_on_time[i];
            }
            if (*task.quality_success) {
                ++day_quality;
                ++agent_good[i];
                day_utility += spec.utility;
            }
        }
        agent.pending.erase(agent.pending.begin(), agent.pending.begin() + static_cast<long>(served));
        agent.carryover_effort =
            agent.pending.empty() ? 0.0 : s.received_effort[static_cast<std::size_t>(agent.pending.front())];
        if (busy[i] > agent.max_effort + 1e-6) throw InvariantError("agent exceeded daily effort");
        s.completion_history[i].push_back(std::move(done_today));
    }

    // 5. mood
    if (c.mood_mode.kind == MoodMode::Kind::fcm_coupled) {
        static const fcm::ConceptMap mood_map = fcm::bundled_map("michael_scenario1");
        for (std::size_t i = 0; i < n_agents; ++i) {
            auto& nodes = s.mood_nodes[i];
            if (agent_done[i] > 0) {
                nodes[1] = static_cast<double>(agent_on_time[i]) / agent_done[i];
                nodes[2] = static_cast<double>(agent_good[i]) / agent_done[i];
            }
            nodes = fcm::step(mood_map, fcm::StateVector{nodes, 0}).values;
            s.agents[i].mood = nodes[0];
        }
    } else {
        for (auto& a : s.agents) a.mood = c.mood_mode.value;
    }

    // 6. metrics
    std::vector<double> pending(n_agents, 0.0);
    std::vector<int> sizes(n_agents, 0);
    std::vector<double> moods(n_agents, 0.0);
    double congestion = 0.0;
    std::size_t in_agent_queues = 0;
    for (std::size_t i = 0; i < n_agents; ++i) {
        const auto& agent = s.agents[i];
        std::map<TypeId, long> per_type;
        for (TaskId id : agent.pending) {
            const auto& task = s.tasks[static_cast<std::size_t>(id)];
            pending[i] += task.remaining_effort;
            ++per_type[task.type_id];
        }
        for (const auto& [type, q] : per_type) congestion += static_cast<double>(q) * static_cast<double>(q);
        sizes[i] = static_cast<int>(agent.pending.size());
        moods[i] = agent.mood;
        in_agent_queues += agent.pending.size();
    }
    if (s.common_queue.size() + in_agent_queues + s.completed.size() != static_cast<std::size_t>(s.arrived)) {
        throw InvariantError("task conservation violated on day " + std::to_string(s.day));
    }

    r.assigned_workload.push_back(std::move(assigned));
    r.busy_effort.push_back(std::move(busy));
    r.pending_workload.push_back(std::move(pending));
    r.queue_sizes.push_back(std::move(sizes));
    r.mood.push_back(std::move(moods));
    r.common_queue_size.push_back(static_cast<int>(s.common_queue.size()));
    r.congestion.push_back(congestion);
    r.arrival_workload.push_back(arrival_work);
    r.completions.push_back(day_completed);
    r.high_quality.push_back(day_quality);
    r.delayed.push_back(day_delayed);
    r.utility.push_back(day_utility);
    r.global_utility += day_utility;
    r.completed += day_completed;
    r.high_quality_count += day_quality;
    r.delay_count += day_delayed;

    ++s.day;
}

RunResult run(const ScenarioConfig& config) { return run(config, config.seed); }

namespace {

// Like validate(), but an empty workload is a legal (if dull) run.
void validate_runnable(const ScenarioConfig& config) {
    std::ostringstream msg;
    bool bad = false;
    for (const auto& v : check(config)) {
        if (v.path == "tasks") continue;
        msg << "\n  " << v.path << ": " << v.message;
        bad = true;
    }
    if (bad) throw InputError("invalid scenario '" + config.name + "':" + msg.str());
}

}  // namespace

RunResult run(const ScenarioConfig& config, std::uint64_t seed) {
    validate_runnable(config);
    SimState s = initial_state(config, seed);
    while (s.day < config.horizon_days) tick(s, config);
    s.result.tasks = std::move(s.tasks);
    return std::move(s.result);
}

Summary summarize(const std::vector<double>& values) {
    Summary out;
    if (values.empty()) return out;
    const double n = static_cast<double>(values.size());
    out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        out.stddev = std::sqrt(ss / (n - 1.0));
    }
    return out;
}

RepeatedResult run_repeated(const ScenarioConfig& config) {
    validate_runnable(config);
    std::vector<std::future<RunResult>> jobs;
    for (int r = 0; r < config.repetitions; ++r) {
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(r);
        jobs.push_back(std::async(std::launch::async, [&config, seed] { return run(config, seed); }));
    }
    RepeatedResult out;
    for (auto& j : jobs) out.runs.push_back(j.get());

    std::vector<double> util, done, good, late, peak;
    for (const auto& r : out.runs) {
        util.push_back(r.global_utility);
        done.push_back(r.completed);
        good.push_back(r.high_quality_count);
        late.push_back(r.delay_count);
        peak.push_back(r.congestion.empty() ? 0.0 : *std::max_element(r.congestion.begin(), r.congestion.end()));
    }
    out.global_utility = summarize(util);
    out.completed = summarize(done);
    out.high_quality = summarize(good);
    out.delay_count = summarize(late);
    out.peak_congestion = summarize(peak);
    return out;
}

}  // namespace agile::sim
