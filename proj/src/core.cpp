#include "agile/core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace agile {

using nlohmann::json;

std::string_view to_string(Category c) {
    switch (c) {
        case Category::HCA: return "HCA";
        case Category::MCA: return "MCA";
        case Category::MIA: return "MIA";
        case Category::HIA: return "HIA";
    }
    return "?";
}

Category parse_category(std::string_view s) {
    for (auto c : {Category::HCA, Category::MCA, Category::MIA, Category::HIA}) {
        if (to_string(c) == s) return c;
    }
    throw InputError("unknown agent category: " + std::string(s));
}

std::string_view to_string(AllocatorKind a) {
    return a == AllocatorKind::SMART ? "SMART" : "AWR";
}

AllocatorKind parse_allocator(std::string_view s) {
    std::string up(s);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (up == "SMART") return AllocatorKind::SMART;
    if (up == "AWR") return AllocatorKind::AWR;
    throw InputError("unknown allocator: " + std::string(s));
}

std::string_view to_string(ServiceOrder o) {
    return o == ServiceOrder::fifo ? "fifo" : "priority";
}

ServiceOrder parse_service_order(std::string_view s) {
    if (s == "fifo") return ServiceOrder::fifo;
    if (s == "priority") return ServiceOrder::priority;
    throw InputError("unknown service order: " + std::string(s));
}

double AgentState::competence_for(const TypeId& type) const {
    auto it = competence_by_type.find(type);
    return it == competence_by_type.end() ? competence : it->second;
}

int TeamConfig::head_count() const {
    int n = 0;
    for (const auto& g : groups) n += g.count;
    return n;
}

int ScenarioConfig::total_tasks() const {
    int n = 0;
    for (const auto& m : task_mix) n += m.count;
    return n;
}

const TaskTypeSpec* ScenarioConfig::find_type(const TypeId& id) const {
    for (const auto& m : task_mix) {
        if (m.spec.type_id == id) return &m.spec;
    }
    return nullptr;
}

std::vector<Violation> check(const ScenarioConfig& c) {
    std::vector<Violation> out;
    auto fail = [&](std::string path, std::string msg) {
        out.push_back({std::move(path), std::move(msg)});
    };

    if (c.horizon_days < 1) fail("horizon_days", "horizon_days ≥ 1");
    if (c.repetitions < 1) fail("repetitions", "repetitions ≥ 1");
    if (!(c.psi >= 0.0)) fail("psi", "psi >= 0");
    if (c.service_rate_window < 1) fail("service_rate_window", "service_rate_window >= 1");
    if (c.mood_mode.kind == MoodMode::Kind::constant &&
        !(c.mood_mode.value >= 0.0 && c.mood_mode.value <= 1.0)) {
        fail("mood_mode.value", "mood ∈ [0,1]");
    }

    if (c.team.groups.empty()) fail("team", "team has no groups");
    for (std::size_t i = 0; i < c.team.groups.size(); ++i) {
        const auto& g = c.team.groups[i];
        const std::string p = "team[" + std::string(to_string(g.category)) + "]";
        if (g.count < 0) fail(p + ".count", "head-count >= 0");
        if (!(g.competence > 0.0 && g.competence <= 1.0)) {
            fail(p + ".competence", "competence ∈ [0,1]");
        }
        if (!(g.max_effort > 0.0)) fail(p + ".max_effort", "max_effort > 0");
    }
    if (c.team.head_count() <= 0) fail("team", "total head-count > 0");

    int total = 0;
    for (std::size_t i = 0; i < c.task_mix.size(); ++i) {
        const auto& m = c.task_mix[i];
        const std::string p = "tasks[" + std::to_string(i) + "]";
        if (m.spec.type_id.empty()) fail(p + ".type_id", "type_id non-empty");
        if (!(m.spec.utility >= 0.0)) fail(p + ".utility", "utility >= 0");
        if (!(m.spec.effort > 0.0)) fail(p + ".effort", "effort > 0");
        if (!(m.spec.priority >= 0.0)) fail(p + ".priority", "priority >= 0");
        if (m.count < 0) fail(p + ".count", "count >= 0");
        total += std::max(m.count, 0);
        for (std::size_t k = 0; k < i; ++k) {
            if (c.task_mix[k].spec.type_id == m.spec.type_id) {
                fail(p + ".type_id", "duplicate type_id " + m.spec.type_id);
            }
        }
    }
    if (total <= 0) fail("tasks", "sum of task counts > 0");
    return out;
}

const ScenarioConfig& validate(const ScenarioConfig& config) {
    auto v = check(config);
    if (!v.empty()) {
        std::ostringstream msg;
        msg << "invalid scenario '" << config.name << "':";
        for (const auto& e : v) msg << "\n  " << e.path << ": " << e.message;
        throw InputError(msg.str());
    }
    return config;
}

namespace {

struct Composition {
    std::string_view name;
    std::array<int, 4> counts;  // HCA, MCA, MIA, HIA
};

// L-M and L-C are rebuilt at 160 heads; see the scenario catalog in README.
constexpr std::array<Composition, 9> kCompositions{{
    {"S-I", {1, 5, 5, 9}},
    {"S-M", {5, 5, 5, 5}},
    {"S-C", {9, 5, 5, 1}},
    {"M-I", {2, 13, 13, 22}},
    {"M-M", {12, 13, 13, 12}},
    {"M-C", {22, 13, 13, 2}},
    {"L-I", {10, 40, 40, 70}},
    {"L-M", {40, 40, 40, 40}},
    {"L-C", {70, 40, 40, 10}},
}};

constexpr std::array<Category, 4> kCategories{Category::HCA, Category::MCA, Category::MIA,
                                              Category::HIA};
constexpr std::array<double, 4> kCompetence{0.9, 0.7, 0.3, 0.1};
constexpr std::array<double, 4> kMaxEffort{20, 15, 15, 10};

// Five task types with utility equal to effort; priority ranks T1 highest.
constexpr std::array<double, 5> kTaskValue{10, 8, 5, 3, 1};

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& c : kCompositions) v.emplace_back(c.name);
        return v;
    }();
    return names;
}

ScenarioConfig preset(std::string_view name) {
    auto it = std::find_if(kCompositions.begin(), kCompositions.end(),
                           [&](const Composition& c) { return c.name == name; });
    if (it == kCompositions.end()) throw UnknownPresetError(std::string(name));

    ScenarioConfig cfg;
    cfg.name = std::string(name);
    for (std::size_t k = 0; k < kCategories.size(); ++k) {
        cfg.team.groups.push_back({kCategories[k], it->counts[k], kCompetence[k], kMaxEffort[k]});
    }

    int per_type = 0;
    switch (name.front()) {
        case 'S': per_type = 100; break;
        case 'M': per_type = 300; break;
        default: per_type = 1000; break;
    }
    for (std::size_t k = 0; k < kTaskValue.size(); ++k) {
        TaskTypeSpec spec;
        spec.type_id = "T" + std::to_string(k + 1);
        spec.priority = static_cast<double>(kTaskValue.size() - k);
        spec.utility = kTaskValue[k];
        spec.effort = kTaskValue[k];
        cfg.task_mix.push_back({spec, per_type});
    }
    cfg.horizon_days = 100;
    cfg.repetitions = 10;
    return cfg;
}

std::vector<AgentState> make_agents(const TeamConfig& team) {
    std::vector<AgentState> agents;
    AgentId next = 0;
    for (const auto& g : team.groups) {
        for (int k = 0; k < g.count; ++k) {
            AgentState a;
            a.agent_id = next++;
            a.category = g.category;
            a.competence = g.competence;
            a.max_effort = g.max_effort;
            agents.push_back(std::move(a));
        }
    }
    return agents;
}

void to_json(json& j, const ScenarioConfig& c) {
    json team = json::array();
    for (const auto& g : c.team.groups) {
        team.push_back({{"category", to_string(g.category)},
                        {"count", g.count},
                        {"competence", g.competence},
                        {"max_effort", g.max_effort}});
    }
    json tasks = json::array();
    for (const auto& m : c.task_mix) {
        tasks.push_back({{"type_id", m.spec.type_id},
                         {"priority", m.spec.priority},
                         {"utility", m.spec.utility},
                         {"effort", m.spec.effort},
                         {"count", m.count}});
    }
    json mood;
    if (c.mood_mode.kind == MoodMode::Kind::constant) {
        mood = {{"kind", "constant"}, {"value", c.mood_mode.value}};
    } else {
        mood = {{"kind", "fcm-coupled"}};
    }
    j = json{{"name", c.name},
             {"team", team},
             {"tasks", tasks},
             {"horizon_days", c.horizon_days},
             {"repetitions", c.repetitions},
             {"seed", c.seed},
             {"psi", c.psi},
             {"allocator", to_string(c.allocator)},
             {"mood_mode", mood},
             {"service_order", to_string(c.service_order)},
             {"service_rate_window", c.service_rate_window}};
}

void from_json(const json& j, ScenarioConfig& c) {
    if (!j.is_object()) throw InputError("scenario document must be an object");
    for (const char* key : {"name", "team", "tasks"}) {
        if (!j.contains(key)) throw InputError(std::string("scenario missing key: ") + key);
    }
    try {
        c = ScenarioConfig{};
        c.name = j.at("name").get<std::string>();
        for (const auto& g : j.at("team")) {
            CategorySpec spec;
            spec.category = parse_category(g.at("category").get<std::string>());
            spec.count = g.at("count").get<int>();
            spec.competence = g.at("competence").get<double>();
            spec.max_effort = g.at("max_effort").get<double>();
            c.team.groups.push_back(spec);
        }
        for (const auto& t : j.at("tasks")) {
            TaskMixEntry m;
            m.spec.type_id = t.at("type_id").get<std::string>();
            m.spec.priority = t.value("priority", 0.0);
            m.spec.utility = t.at("utility").get<double>();
            m.spec.effort = t.at("effort").get<double>();
            m.count = t.at("count").get<int>();
            c.task_mix.push_back(std::move(m));
        }
        c.horizon_days = j.value("horizon_days", 100);
        c.repetitions = j.value("repetitions", 10);
        c.seed = j.value("seed", std::uint64_t{1});
        c.psi = j.value("psi", 1.0);
        c.allocator = parse_allocator(j.value("allocator", std::string("SMART")));
        if (j.contains("mood_mode")) {
            const auto& m = j.at("mood_mode");
            const std::string kind = m.is_string() ? m.get<std::string>() : m.at("kind").get<std::string>();
            if (kind == "constant") {
                c.mood_mode.kind = MoodMode::Kind::constant;
                c.mood_mode.value = m.is_object() ? m.value("value", 1.0) : 1.0;
            } else if (kind == "fcm-coupled") {
                c.mood_mode.kind = MoodMode::Kind::fcm_coupled;
            } else {
                throw InputError("unknown mood_mode: " + kind);
            }
        }
        c.service_order = parse_service_order(j.value("service_order", std::string("fifo")));
        c.service_rate_window = j.value("service_rate_window", 1);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed scenario document: ") + e.what());
    }
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open scenario file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("cannot parse scenario file " + path + ": " + e.what());
    }
    return j.get<ScenarioConfig>();
}

void save_scenario(const ScenarioConfig& config, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write scenario file: " + path);
    out << json(config).dump(2) << '\n';
}

}  // namespace agile
