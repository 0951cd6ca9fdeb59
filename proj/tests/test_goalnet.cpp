#include "agile/goalnet.hpp"
#include "doctest.h"

using namespace agile;
using namespace agile::goalnet;

namespace {

const std::string kData = std::string(AGILE_SOURCE_DIR) + "/data/stories/";

UserStory story(const std::string& id, const std::string& goal, std::vector<std::string> tasks = {}) {
    UserStory s;
    s.id = id;
    s.role = "visitor";
    s.goal = goal;
    s.tasks = std::move(tasks);
    return s;
}

int count_kind(const GoalNet& net, TransitionKind k) {
    int n = 0;
    for (const auto& t : net.transitions) n += t.kind == k;
    return n;
}

GoalNet worked_net() {
    const auto stories = load_stories(kData + "backlog_tasks.json");
    const auto spec = load_goal_spec(kData + "goals.json");
    return build_goal_net(stories, spec.high_level_goals, spec.assignment, spec.options);
}

}  // namespace

TEST_CASE("story template parsing") {
    const auto s = parse_story("As a visitor, I want to search goods by voice input so that I don't need to type");
    CHECK(s.role == "visitor");
    CHECK(s.goal == "search goods by voice input");
    CHECK(s.benefit == "I don't need to type");

    const auto n = parse_story("as AN   elderly user,  i WANT to read larger text.");
    CHECK(n.role == "elderly user");
    CHECK(n.goal == "read larger text");
    CHECK_FALSE(n.benefit.has_value());

    CHECK_THROWS_AS(parse_story("I want to pay"), ParseError);
    CHECK_THROWS_AS(parse_story("As a visitor, I need a cart"), ParseError);
    CHECK_THROWS_AS(parse_story("As a , I want to pay"), ParseError);
    try {
        parse_story("As a customer I would like to pay");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
        CHECK(std::string(e.what()).find("I want to") != std::string::npos);
    }
}

TEST_CASE("render and reparse") {
    auto s = parse_story("As an admin, I want to delete users so that the roster stays clean");
    CHECK(render_story(s) == "As an admin, I want to delete users so that the roster stays clean");
    CHECK(parse_story(render_story(s)) == s);
}

TEST_CASE("one story under one goal is a three-node chain") {
    const auto net = build_goal_net({story("1", "pay quickly")}, {"Simplified work flow"},
                                    {{"1", "Simplified work flow"}});
    CHECK(net.nodes.size() == 3);
    CHECK(net.levels() == 3);
    REQUIRE(net.transitions.size() == 1);
    CHECK(net.transitions[0].kind == TransitionKind::sequence);
    CHECK(validate_net(net).empty());
}

TEST_CASE("two sub-stories fan out and join") {
    const auto net = build_goal_net({story("1", "search"), story("1.1", "voice", {"a"}), story("1.2", "category", {"b"})},
                                    {"UI"}, {{"1", "UI"}});
    CHECK(count_kind(net, TransitionKind::concurrency) == 1);
    CHECK(count_kind(net, TransitionKind::synchronization) == 1);
    for (const auto& t : net.transitions) {
        if (t.kind == TransitionKind::concurrency) {
            CHECK(t.inputs == std::vector<std::string>{"S1"});
            CHECK(t.outputs == std::vector<std::string>{"S1.1", "S1.2"});
            CHECK(t.tasks == std::vector<std::string>{"a", "b"});
        }
    }
    CHECK(net.find("S1")->kind == NodeKind::composite);
    CHECK(net.find("S1.1")->kind == NodeKind::atomic);
    CHECK(net.find("S1.1")->level == 3);
    CHECK(validate_net(net).empty());
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(build_goal_net({story("1", "x")}, {"A"}, {}), InputError);
    CHECK_THROWS_AS(build_goal_net({story("1", "x")}, {"A"}, {{"1", "B"}}), InputError);
    auto orphan = story("2.1", "y");
    orphan.parent = "9";
    CHECK_THROWS_AS(build_goal_net({story("1", "x"), orphan}, {"A"}, {{"1", "A"}}), InputError);
    CHECK_THROWS_AS(build_goal_net({story("1", "x"), story("1", "y")}, {"A"}, {{"1", "A"}}), InputError);
    auto self = story("1.1", "z");
    self.parent = "1.1";
    CHECK_THROWS_AS(build_goal_net({story("1", "x"), self}, {"A"}, {{"1", "A"}}), InputError);
}

TEST_CASE("the bundled user-story corpus") {
    const auto top = load_stories(kData + "backlog_top.txt");
    CHECK(top.size() == 3);
    const auto split = load_stories(kData + "backlog_split.txt");
    CHECK(split.size() == 9);
    CHECK(split[8].role == "common customer");

    const auto tasks = load_stories(kData + "backlog_tasks.json");
    REQUIRE(tasks.size() == 9);
    int roots = 0;
    for (const auto& s : tasks) roots += s.id.find('.') == std::string::npos;
    CHECK(roots == 3);
    CHECK(tasks[1].tasks.size() == 4);
}

TEST_CASE("worked example net") {
    const auto net = worked_net();
    CHECK(net.levels() == 4);
    CHECK(validate_net(net).empty());
    CHECK(net.find(net.root)->label == "Enhanced user experience");

    const auto* search = net.find_by_label("easily search goods on mobile phones");
    const auto* sort = net.find_by_label("easily sort the search results");
    const auto* pay = net.find_by_label("quickly pay on mobile phones");
    REQUIRE(search);
    REQUIRE(sort);
    REQUIRE(pay);
    CHECK(search->level == 2);
    CHECK(net.find(*search->parent)->label == "Improved user interface");
    CHECK(net.find(*pay->parent)->label == "Simplified work flow");

    // search -> sort is a sequence carrying the search-result work.
    bool seq = false;
    for (const auto& t : net.transitions) {
        if (t.kind == TransitionKind::sequence && t.inputs == std::vector<std::string>{search->id} &&
            t.outputs == std::vector<std::string>{sort->id}) {
            seq = t.tasks == std::vector<std::string>{"Getting search result activities"};
        }
    }
    CHECK(seq);
    CHECK(count_kind(net, TransitionKind::concurrency) == 3);
    CHECK(count_kind(net, TransitionKind::synchronization) == 3);

    const auto* voice = net.find_by_label("search goods on mobile phones by voice input");
    REQUIRE(voice);
    const GetCard* card = nullptr;
    for (const auto& c : net.cards) {
        if (c.goal_id == voice->id) card = &c;
    }
    REQUIRE(card);
    CHECK(card->tasks.size() == 4);
    CHECK(card->environment_variables.size() == 3);
    CHECK(net.cards.size() == 6);
}

TEST_CASE("structured round-trip is lossless") {
    const auto net = worked_net();
    const auto doc = to_json(net);
    CHECK(from_json(doc) == net);
    CHECK(to_json(from_json(doc)) == doc);
    CHECK(from_json(nlohmann::json::parse(doc.dump())) == net);
}

TEST_CASE("import rejects dangling references") {
    auto doc = to_json(worked_net());
    auto broken = doc;
    broken["transitions"][0]["outputs"][0] = "S404";
    CHECK_THROWS_AS(from_json(broken), InputError);
    broken = doc;
    broken["nodes"][3]["parent"] = "nowhere";
    CHECK_THROWS_AS(from_json(broken), InputError);
    broken = doc;
    broken["root"] = "G9";
    CHECK_THROWS_AS(from_json(broken), InputError);
}

TEST_CASE("validation catches structural faults") {
    auto net = worked_net();
    auto bad = net;
    bad.nodes.push_back({"X", "floating", NodeKind::atomic, 5, false, std::nullopt});
    auto v = validate_net(bad);
    bool unreachable = false;
    for (const auto& x : v) unreachable |= x.path == "X" && x.message == "unreachable from root";
    CHECK(unreachable);

    bad = net;
    for (auto& t : bad.transitions) {
        if (t.kind == TransitionKind::synchronization) {
            t.inputs.resize(1);
            break;
        }
    }
    CHECK_FALSE(validate_net(bad).empty());

    bad = net;
    for (auto& n : bad.nodes) {
        if (n.id == "S1.1") n.level = 4;
    }
    CHECK_FALSE(validate_net(bad).empty());

    bad = net;
    bad.cards.push_back({"S3", {}, {}});
    CHECK_FALSE(validate_net(bad).empty());
}

TEST_CASE("cut-across goals bypass the sibling structure") {
    BuildOptions o;
    o.cut_across = {"1.3"};
    const auto net = build_goal_net(
        {story("1", "search"), story("1.1", "voice"), story("1.2", "category"), story("1.3", "audit log")}, {"UI"},
        {{"1", "UI"}}, o);
    CHECK(net.find("S1.3")->cut_across);
    for (const auto& t : net.transitions) {
        if (t.kind == TransitionKind::concurrency) CHECK(t.outputs.size() == 2);
    }
    CHECK(validate_net(net).empty());
}

TEST_CASE("DOT export") {
    const auto dot = to_dot(worked_net());
    CHECK(dot.rfind("digraph goal_net {", 0) == 0);
    CHECK(dot.find("Improved user interface") != std::string::npos);
    CHECK(dot.find("concurrency") != std::string::npos);
    CHECK(dot.find("synchronization") != std::string::npos);
}

TEST_CASE("plain-text corpus lines") {
    const auto s = parse_story_lines(
        "# backlog\n"
        "1 | As a visitor, I want to browse so that I see goods\n"
        "- Design UI\n"
        "- Implement\n"
        "\n"
        "2 | As a customer, I want to pay\n");
    REQUIRE(s.size() == 2);
    CHECK(s[0].tasks.size() == 2);
    CHECK(s[1].id == "2");
    CHECK_THROWS_AS(parse_story_lines("- orphan task\n"), InputError);
    CHECK_THROWS_AS(parse_story_lines("1 | I want to pay\n"), InputError);
}
