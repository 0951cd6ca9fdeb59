#include <filesystem>

#include "agile/core.hpp"
#include "doctest.h"

using namespace agile;

namespace {

bool has_violation(const ScenarioConfig& c, const std::string& needle) {
    for (const auto& v : check(c)) {
        if (v.message.find(needle) != std::string::npos) return true;
    }
    return false;
}

const CategorySpec& group(const ScenarioConfig& c, Category cat) {
    for (const auto& g : c.team.groups) {
        if (g.category == cat) return g;
    }
    FAIL("category missing");
    throw 0;
}

}  // namespace

TEST_CASE("S-M preset matches the small mixed team and task tables") {
    const auto c = preset("S-M");
    CHECK(c.team.head_count() == 20);
    const auto& hca = group(c, Category::HCA);
    CHECK(hca.count == 5);
    CHECK(hca.competence == doctest::Approx(0.9));
    CHECK(hca.max_effort == 20);
    CHECK(group(c, Category::MCA).competence == doctest::Approx(0.7));
    CHECK(group(c, Category::MCA).max_effort == 15);
    CHECK(group(c, Category::MIA).competence == doctest::Approx(0.3));
    CHECK(group(c, Category::MIA).max_effort == 15);
    CHECK(group(c, Category::HIA).competence == doctest::Approx(0.1));
    CHECK(group(c, Category::HIA).max_effort == 10);

    REQUIRE(c.task_mix.size() == 5);
    const double ue[] = {10, 8, 5, 3, 1};
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(c.task_mix[k].count == 100);
        CHECK(c.task_mix[k].spec.utility == ue[k]);
        CHECK(c.task_mix[k].spec.effort == ue[k]);
    }
    CHECK(c.horizon_days == 100);
    CHECK(c.repetitions == 10);
}

TEST_CASE("M-C and L-M compositions") {
    const auto mc = preset("M-C");
    CHECK(group(mc, Category::HCA).count == 22);
    CHECK(group(mc, Category::MCA).count == 13);
    CHECK(group(mc, Category::MIA).count == 13);
    CHECK(group(mc, Category::HIA).count == 2);
    CHECK(mc.total_tasks() == 1500);

    const auto lm = preset("L-M");
    for (auto cat : {Category::HCA, Category::MCA, Category::MIA, Category::HIA}) CHECK(group(lm, cat).count == 40);
    CHECK(lm.total_tasks() == 5000);

    const auto lc = preset("L-C");
    CHECK(group(lc, Category::HCA).count == 70);
    CHECK(group(lc, Category::HIA).count == 10);
}

TEST_CASE("every preset validates, has its family head-count, and sets utility equal to effort") {
    REQUIRE(preset_names().size() == 9);
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        const auto c = preset(name);
        CHECK(check(c).empty());
        CHECK_NOTHROW(validate(c));
        const int expected = name[0] == 'S' ? 20 : name[0] == 'M' ? 50 : 160;
        CHECK(c.team.head_count() == expected);
        double util = 0, effort = 0;
        for (const auto& t : c.task_mix) {
            util += t.spec.utility * t.count;
            effort += t.spec.effort * t.count;
        }
        CHECK(util == effort);
        CHECK(c == preset(name));
    }
}

TEST_CASE("unknown preset is its own error") {
    CHECK_THROWS_AS(preset("X-Y"), UnknownPresetError);
    try {
        preset("nope");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("unknown preset") != std::string::npos);
    }
}

TEST_CASE("validation reports each violated field") {
    auto c = preset("S-I");
    c.horizon_days = 0;
    CHECK(has_violation(c, "horizon_days ≥ 1"));
    CHECK_THROWS_AS(validate(c), InputError);

    c = preset("S-I");
    c.team.groups[0].competence = 1.3;
    CHECK(has_violation(c, "competence ∈ [0,1]"));

    c = preset("S-I");
    c.repetitions = 0;
    c.task_mix[0].spec.effort = 0;
    c.task_mix[1].spec.utility = -1;
    const auto v = check(c);
    CHECK(v.size() >= 3);
    for (const auto& x : v) CHECK_FALSE(x.path.empty());
}

TEST_CASE("zero total task count is flagged") {
    auto c = preset("S-I");
    for (auto& t : c.task_mix) t.count = 0;
    CHECK(has_violation(c, "> 0"));
}

TEST_CASE("agents are numbered in group order with category parameters") {
    const auto agents = make_agents(preset("S-I").team);
    REQUIRE(agents.size() == 20);
    CHECK(agents[0].agent_id == 0);
    CHECK(agents[0].category == Category::HCA);
    CHECK(agents[1].category == Category::MCA);
    CHECK(agents[19].category == Category::HIA);
    CHECK(agents[19].max_effort == 10);
    for (std::size_t i = 0; i < agents.size(); ++i) CHECK(agents[i].agent_id == static_cast<int>(i));
}

TEST_CASE("per-type competence overrides the scalar") {
    AgentState a;
    a.competence = 0.4;
    a.competence_by_type["T1"] = 0.8;
    CHECK(a.competence_for("T1") == 0.8);
    CHECK(a.competence_for("T2") == 0.4);
}

TEST_CASE("scenario documents round-trip through JSON and files") {
    auto c = preset("M-I");
    c.mood_mode = {MoodMode::Kind::fcm_coupled, 1.0};
    c.allocator = AllocatorKind::AWR;
    c.seed = 42;
    nlohmann::json j = c;
    for (const char* key : {"name", "team", "tasks", "horizon_days", "repetitions", "seed", "psi", "allocator",
                            "mood_mode"}) {
        CHECK(j.contains(key));
    }
    CHECK(j.get<ScenarioConfig>() == c);

    const auto path = std::filesystem::temp_directory_path() / "agile_core_roundtrip.json";
    save_scenario(c, path.string());
    CHECK(load_scenario(path.string()) == c);
    std::filesystem::remove(path);
}

TEST_CASE("malformed scenario documents are input errors") {
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), InputError);
    nlohmann::json j = preset("S-I");
    j["allocator"] = "GREEDY";
    CHECK_THROWS_AS(j.get<ScenarioConfig>(), InputError);
}

TEST_CASE("name parsing") {
    CHECK(parse_allocator("smart") == AllocatorKind::SMART);
    CHECK(parse_allocator("AWR") == AllocatorKind::AWR);
    CHECK(parse_category("MIA") == Category::MIA);
    CHECK_THROWS_AS(parse_category("XYZ"), InputError);
}
