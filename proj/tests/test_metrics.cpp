#include <random>

#include "agile/metrics.hpp"
#include "doctest.h"

using namespace agile;
using namespace agile::metrics;

namespace {

SprintRecord rec(const std::string& who, double d, double est, double act, double qual, int sprint = 0) {
    SprintRecord r;
    r.task_id = "t";
    r.assignee_id = who;
    r.difficulty = d;
    r.estimated_days = est;
    r.actual_days = act;
    r.quality = qual;
    r.sprint_index = sprint;
    r.confidence = 5;
    return r;
}

const char* kHeader =
    "task_id,assignee_id,sprint_index,difficulty,priority,confidence,estimated_days,actual_days,quality,"
    "collaborators,mood_begin,mood_end\n";

}  // namespace

TEST_CASE("competence hand evaluations") {
    CHECK(competence({}, "a") == 0.5);
    const std::vector<SprintRecord> one{rec("a", 8, 3, 3, 7)};
    CHECK(std::abs(competence(one, "a") - 0.9) < 1e-12);
    const std::vector<SprintRecord> two{rec("a", 8, 3, 2, 7), rec("a", 4, 3, 5, 9)};
    CHECK(std::abs(competence(two, "a") - 9.0 / 14.0) < 1e-12);
    // Quality exactly 5 is not satisfactory.
    const std::vector<SprintRecord> q5{rec("a", 8, 3, 3, 5)};
    CHECK(std::abs(competence(q5, "a") - 0.1) < 1e-12);
    // Other agents' records do not count.
    CHECK(competence(one, "b") == 0.5);
}

TEST_CASE("competence monotonicity fuzz") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> d(0.5, 10), q(0, 10), days(0, 10);
    std::uniform_int_distribution<int> n(0, 12);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<SprintRecord> rs;
        const int k = n(rng);
        for (int i = 0; i < k; ++i) rs.push_back(rec("a", d(rng), days(rng), days(rng), q(rng)));
        const double base = competence(rs, "a");
        CHECK(base > 0.0);
        CHECK(base < 1.0);

        auto good = rs;
        good.push_back(rec("a", d(rng), 5, 4, 8));
        CHECK(competence(good, "a") > base);

        auto bad = rs;
        bad.push_back(trial % 2 ? rec("a", d(rng), 5, 6, 9) : rec("a", d(rng), 5, 4, 3));
        CHECK(competence(bad, "a") < base);
    }
}

TEST_CASE("technical productivity") {
    CHECK(technical_productivity({}, "a") == 0);
    const std::vector<SprintRecord> one{rec("a", 8, 1, 1, 7, 1), rec("a", 5, 1, 1, 7, 1)};
    CHECK(technical_productivity(one, "a") == 13);
    const std::vector<SprintRecord> two{rec("a", 8, 1, 1, 7, 1), rec("a", 5, 1, 1, 7, 1), rec("a", 7, 1, 1, 7, 2)};
    CHECK(technical_productivity(two, "a") == 10);
}

TEST_CASE("congestion") {
    const std::vector<long> a{2, 3}, zero{0, 0, 0}, five{5}, perm{3, 2};
    CHECK(congestion(a) == 13);
    CHECK(congestion(zero) == 0);
    CHECK(congestion(five) == 25);
    CHECK(congestion(perm) == congestion(a));
    CHECK(congestion(std::vector<long>{}) == 0);
}

TEST_CASE("allocation proportions") {
    auto s = allocation_proportion({{1, 30.0}, {2, 10.0}}, {{1, Category::HCA}, {2, Category::HIA}});
    CHECK(s.by_agent.at(1) == doctest::Approx(0.75));
    CHECK(s.by_agent.at(2) == doctest::Approx(0.25));
    CHECK(s.by_category.at(Category::HCA) == doctest::Approx(0.75));
    CHECK(allocation_proportion({{7, 4.0}}).by_agent.at(7) == 1.0);
    auto eq = allocation_proportion({{1, 2.0}, {2, 2.0}, {3, 2.0}, {4, 2.0}});
    for (const auto& [id, v] : eq.by_agent) CHECK(v == doctest::Approx(0.25));
    CHECK_THROWS_WITH_AS(allocation_proportion({{1, 0.0}}), "no allocations", InputError);

    for (const char* name : {"S-I", "M-C"}) {
        const auto r = sim::run(preset(name), 2);
        const auto sh = allocation_proportion(r);
        double total = 0;
        for (const auto& [id, v] : sh.by_agent) total += v;
        CHECK(std::abs(total - 1.0) < 1e-9);
    }
}

TEST_CASE("delay percentage") {
    std::vector<SprintRecord> rs;
    for (int i = 0; i < 10; ++i) rs.push_back(rec("a", 1, 2, i < 2 ? 3 : 2, 7));
    CHECK(delay_percentage(rs) == doctest::Approx(0.2));
    for (auto& r : rs) r.actual_days = 1;
    CHECK(delay_percentage(rs) == 0.0);
    for (auto& r : rs) r.actual_days = 5;
    CHECK(delay_percentage(rs) == 1.0);
    CHECK_THROWS_AS(delay_percentage(std::vector<SprintRecord>{}), InputError);

    auto c = preset("S-I");
    c.allocator = AllocatorKind::AWR;
    const auto r = sim::run(c, 1);
    const double p = delay_percentage(r, c);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    CHECK(p == doctest::Approx(static_cast<double>(r.delay_count) / r.completed));
}

TEST_CASE("pearson") {
    const std::vector<double> x{1, 2, 3}, y{2, 4, 6}, z{3, 2, 1}, flat{5, 5, 5};
    CHECK(pearson(x, y) == doctest::Approx(1.0));
    CHECK(pearson(x, z) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(pearson(x, flat), InputError);
    CHECK_THROWS_AS(pearson(x, std::vector<double>{1, 2}), InputError);
    CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{2}), InputError);

    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    for (int t = 0; t < 200; ++t) {
        std::vector<double> a(10), b(10), ab(10);
        for (int i = 0; i < 10; ++i) {
            a[i] = g(rng);
            b[i] = a[i] * 0.3 + g(rng);
            ab[i] = 4.0 * a[i] - 7.0;
        }
        const double r = pearson(a, b);
        CHECK(std::abs(r) <= 1.0);
        CHECK(pearson(b, a) == doctest::Approx(r));
        CHECK(pearson(ab, b) == doctest::Approx(r));
    }
}

TEST_CASE("confidence variance is the population variance") {
    std::vector<SprintRecord> rs{rec("a", 1, 1, 1, 7), rec("a", 1, 1, 1, 7)};
    rs[0].confidence = 2;
    rs[1].confidence = 6;
    CHECK(confidence_variance(rs) == 4.0);
}

TEST_CASE("log ingestion") {
    const std::string ok = std::string(kHeader) +
                           "t1,ann,1,8,5,7,3,3,7,1,3,4\n"
                           "t2,ann,1,4,5,7,3,5,9,2,3,4\n"
                           "\"t3, split\",bob,2,5,5,7,2,1,6,1,2,2\n";
    const auto r = parse_log(ok);
    REQUIRE(r.records.size() == 3);
    CHECK(r.rejected.empty());
    CHECK(r.records[2].task_id == "t3, split");
    CHECK(std::abs(competence(r.records, "ann") - 9.0 / 14.0) < 1e-12);

    const auto bad = parse_log(std::string(kHeader) +
                               "t1,ann,1,8,5,7,3,3,12,1,3,4\n"
                               "t2,ann,1,8,5,7,3,3,7,1,0,4\n"
                               "t3,ann,1,8,5,7,3,x,7,1,3,4\n"
                               "t4,ann,1,8,5,7,3,3,7,1,3,4\n");
    CHECK(bad.records.size() == 1);
    REQUIRE(bad.rejected.size() == 3);
    CHECK(bad.rejected[0].row == 1);
    CHECK(bad.rejected[0].message.find("quality") != std::string::npos);
    CHECK(bad.rejected[1].message.find("mood_begin") != std::string::npos);
    CHECK(bad.rejected[2].row == 3);

    CHECK_THROWS_AS(parse_log("task_id,assignee_id\nx,y\n"), InputError);
    CHECK_THROWS_AS(ingest_log("/nonexistent/log.csv"), InputError);

    const auto extra = parse_log(
        "task_id,assignee_id,sprint_index,difficulty,priority,confidence,estimated_days,actual_days,quality,"
        "collaborators,mood_begin,mood_end,team_id,workload,final_score,team_score\n"
        "t1,ann,1,8,5,7,3,3,7,1,3,4,team-a,12,88,90\n");
    REQUIRE(extra.records.size() == 1);
    CHECK(extra.records[0].team_id == "team-a");
    CHECK(extra.records[0].final_score == 88);
}

TEST_CASE("queue boundedness monitor") {
    sim::RunResult r;
    r.agent_ids = {0};
    r.arrival_workload = {5, 5, 5, 5};
    r.pending_workload = {{1}, {4}, {6}, {9}};
    auto rep = queue_boundedness(r);
    CHECK(rep.slack == 5);
    CHECK(rep.bounded);
    r.pending_workload = {{1}, {4}, {6}, {9.5}};
    CHECK_FALSE(queue_boundedness(r).bounded);
    CHECK(peak_pending(r, 0) == 9.5);
}
