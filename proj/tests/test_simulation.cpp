#include <map>

#include "agile/metrics.hpp"
#include "agile/simulation.hpp"
#include "doctest.h"

using namespace agile;

namespace {

ScenarioConfig tiny(double competence, double emax, double effort, int horizon, AllocatorKind alloc) {
    ScenarioConfig c;
    c.name = "tiny";
    c.team.groups = {{Category::HCA, 1, competence, emax}};
    c.task_mix = {{{"T1", 5, effort, effort}, 1}};
    c.horizon_days = horizon;
    c.repetitions = 1;
    c.allocator = alloc;
    return c;
}

}  // namespace

TEST_CASE("arrivals are evenly paced with exact per-type counts") {
    const auto sm = sim::generate_arrivals(preset("S-M"), 1);
    REQUIRE(sm.size() == 500);
    std::map<int, int> per_day;
    std::map<std::string, int> per_type;
    for (std::size_t i = 0; i < sm.size(); ++i) {
        CHECK(sm[i].task_id == static_cast<int>(i));
        ++per_day[sm[i].arrival_day];
        ++per_type[sm[i].type_id];
        CHECK(sm[i].status == TaskStatus::pending);
    }
    CHECK(per_day.size() == 100);
    for (const auto& [d, n] : per_day) CHECK(n == 5);
    for (const auto& [t, n] : per_type) CHECK(n == 100);

    const auto mm = sim::generate_arrivals(preset("M-M"), 1);
    REQUIRE(mm.size() == 1500);
    per_day.clear();
    for (const auto& t : mm) ++per_day[t.arrival_day];
    for (const auto& [d, n] : per_day) CHECK(n == 15);

    auto one = tiny(1, 10, 1, 1, AllocatorKind::SMART);
    one.task_mix[0].count = 5;
    for (const auto& t : sim::generate_arrivals(one, 3)) CHECK(t.arrival_day == 0);
}

TEST_CASE("uneven totals use floor or ceil per day") {
    auto c = preset("S-I");
    c.task_mix[0].count = 37;
    c.horizon_days = 9;
    const auto a = sim::generate_arrivals(c, 2);
    std::map<int, int> per_day;
    for (const auto& t : a) ++per_day[t.arrival_day];
    const int n = c.total_tasks();
    for (const auto& [d, k] : per_day) {
        CHECK(k >= n / 9);
        CHECK(k <= (n + 8) / 9);
    }
}

TEST_CASE("arrival schedules are seed-determined and allocator-independent") {
    auto c = preset("S-C");
    const auto a = sim::generate_arrivals(c, 9);
    const auto b = sim::generate_arrivals(c, 9);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].type_id == b[i].type_id);
        CHECK(a[i].arrival_day == b[i].arrival_day);
    }
    c.allocator = AllocatorKind::SMART;
    const auto rs = sim::run(c, 9);
    c.allocator = AllocatorKind::AWR;
    const auto ra = sim::run(c, 9);
    for (std::size_t i = 0; i < rs.tasks.size(); ++i) {
        CHECK(rs.tasks[i].arrival_day == ra.tasks[i].arrival_day);
        CHECK(rs.tasks[i].type_id == ra.tasks[i].type_id);
    }
}

TEST_CASE("single competent agent finishes a full-day task on day 0") {
    const auto r = sim::run(tiny(1.0, 10, 10, 3, AllocatorKind::SMART));
    REQUIRE(r.tasks.size() == 1);
    CHECK(r.tasks[0].status == TaskStatus::completed);
    CHECK(r.tasks[0].completion_day == 0);
    CHECK(r.tasks[0].quality_success == true);
    CHECK(r.global_utility == 10);
}

TEST_CASE("carryover service: effort 3+3+3+1 completes on day 3") {
    const auto r = sim::run(tiny(1.0, 3, 10, 6, AllocatorKind::AWR));
    CHECK(r.tasks[0].completion_day == 3);
    CHECK(r.busy_effort[0][0] == 3);
    CHECK(r.busy_effort[3][0] == 1);
    CHECK(r.pending_workload[1][0] == 4);

    // SMART never accepts a task larger than one day's budget.
    const auto s = sim::run(tiny(1.0, 3, 10, 6, AllocatorKind::SMART));
    CHECK(s.tasks[0].status == TaskStatus::pending);
    CHECK(s.common_queue_size.back() == 1);
}

TEST_CASE("zero mood under SMART accepts nothing") {
    auto c = tiny(0.9, 20, 5, 5, AllocatorKind::SMART);
    c.mood_mode = {MoodMode::Kind::constant, 0.0};
    const auto r = sim::run(c);
    CHECK(r.completed == 0);
    CHECK(r.global_utility == 0);
    for (const auto& day : r.assigned_workload) CHECK(day[0] == 0);
}

TEST_CASE("zero-task scenario runs and records nothing") {
    auto c = preset("S-I");
    for (auto& t : c.task_mix) t.count = 0;
    c.repetitions = 2;
    const auto rr = sim::run_repeated(c);
    for (const auto& r : rr.runs) {
        CHECK(r.global_utility == 0);
        CHECK(r.completed == 0);
        CHECK(static_cast<int>(r.congestion.size()) == c.horizon_days);
        for (double l : r.congestion) CHECK(l == 0);
    }
    CHECK(rr.global_utility.mean == 0);
}

TEST_CASE("invalid configs are rejected before running") {
    auto c = preset("S-I");
    c.horizon_days = 0;
    CHECK_THROWS_AS(sim::run(c), InputError);
}

TEST_CASE("series lengths and totals agree") {
    for (auto alloc : {AllocatorKind::SMART, AllocatorKind::AWR}) {
        auto c = preset("M-I");
        c.allocator = alloc;
        const auto r = sim::run(c, 4);
        const std::size_t T = static_cast<std::size_t>(c.horizon_days);
        CHECK(r.utility.size() == T);
        CHECK(r.completions.size() == T);
        CHECK(r.pending_workload.size() == T);
        double u = 0;
        int done = 0, hq = 0, late = 0;
        for (std::size_t d = 0; d < T; ++d) {
            u += r.utility[d];
            done += r.completions[d];
            hq += r.high_quality[d];
            late += r.delayed[d];
            for (std::size_t i = 0; i < r.agent_ids.size(); ++i) {
                CHECK(r.busy_effort[d][i] <= r.max_effort[i] + 1e-9);
            }
        }
        CHECK(u == r.global_utility);
        CHECK(done == r.completed);
        CHECK(hq == r.high_quality_count);
        CHECK(late == r.delay_count);
        CHECK(r.cumulative_utility().back() == r.global_utility);

        int completed_tasks = 0;
        for (const auto& t : r.tasks) {
            if (t.status == TaskStatus::completed) {
                ++completed_tasks;
                CHECK(t.remaining_effort == 0);
                CHECK(*t.completion_day >= t.arrival_day);
                CHECK(t.quality_success.has_value());
            } else {
                CHECK_FALSE(t.quality_success.has_value());
            }
        }
        CHECK(completed_tasks == r.completed);
    }
}

TEST_CASE("conservation holds every day when stepping by hand") {
    auto c = preset("S-I");
    c.allocator = AllocatorKind::AWR;
    auto s = sim::initial_state(c, 5);
    while (s.day < c.horizon_days) {
        sim::tick(s, c);
        std::size_t queued = s.common_queue.size();
        for (const auto& a : s.agents) queued += a.pending.size();
        CHECK(queued + s.completed.size() == static_cast<std::size_t>(s.arrived));
    }
    CHECK_THROWS_AS(sim::tick(s, c), InputError);
}

TEST_CASE("repeated runs are reproducible and seeded consecutively") {
    auto c = preset("S-M");
    const auto a = sim::run_repeated(c);
    const auto b = sim::run_repeated(c);
    REQUIRE(a.runs.size() == 10);
    for (std::size_t r = 0; r < a.runs.size(); ++r) {
        CHECK(a.runs[r].seed == c.seed + r);
        CHECK(a.runs[r].utility == b.runs[r].utility);
        CHECK(a.runs[r].pending_workload == b.runs[r].pending_workload);
    }
    CHECK(a.runs[9].global_utility == sim::run(c, c.seed + 9).global_utility);
    CHECK(a.global_utility.stddev > 0);
}

TEST_CASE("SMART out-earns AWR on the small mixed team") {
    auto c = preset("S-M");
    c.allocator = AllocatorKind::SMART;
    const auto smart = sim::run_repeated(c);
    c.allocator = AllocatorKind::AWR;
    const auto awr = sim::run_repeated(c);
    CHECK(smart.global_utility.mean > awr.global_utility.mean);
}

TEST_CASE("AWR concentrates work on the most competent agent") {
    auto c = preset("S-I");
    c.allocator = AllocatorKind::AWR;
    const auto shares = metrics::allocation_proportion(sim::run(c));
    CHECK(shares.by_agent.at(0) == doctest::Approx(1.0));
}

TEST_CASE("SMART keeps agent queues bounded") {
    for (const char* name : {"S-I", "M-M", "L-C"}) {
        const auto r = sim::run(preset(name), 1);
        CHECK(metrics::queue_boundedness(r).bounded);
    }
}

TEST_CASE("coupled mood stays in [0,1] and responds to outcomes") {
    auto c = preset("S-I");
    c.mood_mode = {MoodMode::Kind::fcm_coupled, 1.0};
    const auto r = sim::run(c, 3);
    bool changed = false;
    for (const auto& day : r.mood) {
        for (double m : day) {
            CHECK(m >= 0.0);
            CHECK(m <= 1.0);
            if (m != 1.0) changed = true;
        }
    }
    CHECK(changed);
}

TEST_CASE("priority service order serves high-priority work first") {
    auto c = preset("S-I");
    c.allocator = AllocatorKind::AWR;
    c.service_order = ServiceOrder::priority;
    const auto r = sim::run(c, 1);
    // Under a backlog, the lowest-priority type is starved.
    int t5 = 0, t1 = 0;
    for (const auto& t : r.tasks) {
        if (t.status != TaskStatus::completed) continue;
        if (t.type_id == "T1") ++t1;
        if (t.type_id == "T5") ++t5;
    }
    CHECK(t1 > t5);
}

TEST_CASE("nominal duration") {
    CHECK(sim::nominal_days(10, 3) == 4);
    CHECK(sim::nominal_days(10, 10) == 1);
    CHECK(sim::nominal_days(1, 20) == 1);
}
