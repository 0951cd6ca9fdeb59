#include "agile/goalnet.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace agile::goalnet {

using nlohmann::json;

namespace {

std::string normalize_ws(std::string_view text) {
    std::string out;
    bool space = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            space = !out.empty();
        } else {
            if (space) out += ' ';
            space = false;
            out += ch;
        }
    }
    return out;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

std::string trim(std::string_view s, std::string_view strip = " \t\r\n") {
    const auto b = s.find_first_not_of(strip);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(strip);
    return std::string(s.substr(b, e - b + 1));
}

std::optional<std::string> dotted_parent(const std::string& id) {
    const auto dot = id.rfind('.');
    if (dot == std::string::npos) return std::nullopt;
    return id.substr(0, dot);
}

bool is_proper_prefix(const std::string& parent, const std::string& id) {
    return id.size() > parent.size() + 1 && id.compare(0, parent.size(), parent) == 0 &&
           id[parent.size()] == '.';
}

}  // namespace

UserStory parse_story(std::string_view text) {
    const std::string norm = normalize_ws(text);
    const std::string low = lower(norm);

    std::size_t role_start = 0;
    if (low.rfind("as an ", 0) == 0) {
        role_start = 6;
    } else if (low.rfind("as a ", 0) == 0) {
        role_start = 5;
    } else {
        throw ParseError("story must start with \"As a\" or \"As an\"", 0);
    }

    const std::string want = "i want to ";
    const auto want_at = low.find(want, role_start);
    if (want_at == std::string::npos) {
        throw ParseError("missing \"I want to\" clause", role_start);
    }
    UserStory s;
    s.role = trim(std::string_view(norm).substr(role_start, want_at - role_start), " ,");
    if (s.role.empty()) throw ParseError("empty role", role_start);

    const std::size_t goal_start = want_at + want.size();
    const auto so_at = low.find(" so that ", goal_start);
    const std::size_t goal_end = so_at == std::string::npos ? norm.size() : so_at;
    s.goal = trim(std::string_view(norm).substr(goal_start, goal_end - goal_start), " ,.");
    if (s.goal.empty()) throw ParseError("empty goal", goal_start);

    if (so_at != std::string::npos) {
        const std::size_t b = so_at + std::string(" so that ").size();
        auto benefit = trim(std::string_view(norm).substr(b), " .");
        if (benefit.empty()) throw ParseError("empty \"so that\" clause", b);
        s.benefit = std::move(benefit);
    }
    return s;
}

std::string render_story(const UserStory& story) {
    const char first = story.role.empty() ? 'x' : static_cast<char>(std::tolower(story.role.front()));
    const bool vowel = std::string_view("aeiou").find(first) != std::string_view::npos;
    std::string out = std::string(vowel ? "As an " : "As a ") + story.role + ", I want to " + story.goal;
    if (story.benefit) out += " so that " + *story.benefit;
    return out;
}

std::string_view to_string(NodeKind k) {
    return k == NodeKind::composite ? "composite" : "atomic";
}

std::string_view to_string(TransitionKind k) {
    switch (k) {
        case TransitionKind::sequence: return "sequence";
        case TransitionKind::concurrency: return "concurrency";
        case TransitionKind::synchronization: return "synchronization";
    }
    return "?";
}

TransitionKind parse_transition_kind(std::string_view s) {
    for (auto k : {TransitionKind::sequence, TransitionKind::concurrency, TransitionKind::synchronization}) {
        if (to_string(k) == s) return k;
    }
    throw InputError("unknown transition kind: " + std::string(s));
}

const GoalNode* GoalNet::find(std::string_view id) const {
    for (const auto& n : nodes) {
        if (n.id == id) return &n;
    }
    return nullptr;
}

const GoalNode* GoalNet::find_by_label(std::string_view label) const {
    for (const auto& n : nodes) {
        if (n.label == label) return &n;
    }
    return nullptr;
}

std::vector<const GoalNode*> GoalNet::children(std::string_view id) const {
    std::vector<const GoalNode*> out;
    for (const auto& n : nodes) {
        if (n.parent && *n.parent == id) out.push_back(&n);
    }
    return out;
}

int GoalNet::levels() const {
    std::set<int> seen;
    for (const auto& n : nodes) seen.insert(n.level);
    return static_cast<int>(seen.size());
}

GoalNet build_goal_net(const std::vector<UserStory>& stories,
                       const std::vector<std::string>& high_level_goals,
                       const std::map<std::string, std::string>& assignment,
                       const BuildOptions& options) {
    std::map<std::string, const UserStory*> by_id;
    for (const auto& s : stories) {
        if (s.id.empty()) throw InputError("story without id");
        if (s.role.empty() || s.goal.empty()) throw InputError("story " + s.id + " lacks role or goal");
        if (!by_id.emplace(s.id, &s).second) throw InputError("duplicate story id " + s.id);
    }
    {
        std::set<std::string> hl(high_level_goals.begin(), high_level_goals.end());
        if (hl.size() != high_level_goals.size()) throw InputError("duplicate high-level goal");
        for (const auto& [story, goal] : assignment) {
            if (!hl.count(goal)) throw InputError("story " + story + " assigned to unknown goal '" + goal + "'");
            if (!by_id.count(story)) throw InputError("assignment names unknown story " + story);
        }
    }

    // Resolve parents: explicit, else the dotted prefix when that story exists.
    std::map<std::string, std::optional<std::string>> parent_of;
    for (const auto& s : stories) {
        std::optional<std::string> p = s.parent;
        if (!p) {
            auto d = dotted_parent(s.id);
            if (d && by_id.count(*d)) p = d;
        }
        if (p) {
            if (!by_id.count(*p)) throw InputError("story " + s.id + " has unknown parent " + *p);
            if (!is_proper_prefix(*p, s.id)) {
                throw InputError("story " + s.id + ": parent " + *p + " is not a proper prefix");
            }
        }
        parent_of[s.id] = p;
    }
    for (const auto& s : stories) {
        std::set<std::string> seen{s.id};
        auto p = parent_of[s.id];
        while (p) {
            if (!seen.insert(*p).second) throw InputError("cyclic parent references at story " + s.id);
            p = parent_of[*p];
        }
    }

    auto depth = [&](const std::string& id) {
        int d = 0;
        for (auto p = parent_of[id]; p; p = parent_of[*p]) ++d;
        return d;
    };
    auto assigned_goal = [&](const std::string& id) -> std::string {
        for (std::optional<std::string> cur = id; cur; cur = parent_of[*cur]) {
            if (auto it = assignment.find(*cur); it != assignment.end()) return it->second;
        }
        throw InputError("story " + id + " is not assigned to a high-level goal");
    };

    GoalNet net;
    net.root = "G0";
    net.nodes.push_back({"G0", options.root_label, NodeKind::composite, 0, false, std::nullopt});
    std::map<std::string, std::string> hl_node;
    for (std::size_t k = 0; k < high_level_goals.size(); ++k) {
        const std::string id = "H" + std::to_string(k + 1);
        hl_node[high_level_goals[k]] = id;
        net.nodes.push_back({id, high_level_goals[k], NodeKind::atomic, 1, false, std::string("G0")});
    }
    const std::set<std::string> cut(options.cut_across.begin(), options.cut_across.end());
    auto story_node = [](const std::string& id) { return "S" + id; };
    for (const auto& s : stories) {
        GoalNode n;
        n.id = story_node(s.id);
        n.label = s.goal;
        n.level = 2 + depth(s.id);
        n.cut_across = cut.count(s.id) > 0;
        const auto& p = parent_of[s.id];
        n.parent = p ? story_node(*p) : hl_node.at(assigned_goal(s.id));
        net.nodes.push_back(std::move(n));
    }
    for (const auto& c : options.cut_across) {
        if (!by_id.count(c)) throw InputError("cut_across names unknown story " + c);
    }
    if (high_level_goals.empty()) net.nodes.front().kind = NodeKind::atomic;
    for (auto& n : net.nodes) {
        if (n.id == net.root) continue;
        const bool has_children = std::any_of(net.nodes.begin(), net.nodes.end(), [&](const GoalNode& c) {
            return c.parent && *c.parent == n.id;
        });
        n.kind = has_children ? NodeKind::composite : NodeKind::atomic;
    }

    auto tasks_of = [&](const GoalNode& n) -> std::vector<std::string> {
        if (n.id.rfind('S', 0) != 0) return {};
        return by_id.at(n.id.substr(1))->tasks;
    };

    std::map<std::string, const SequenceOverride*> seq_for;
    for (const auto& o : options.sequences) {
        std::string pid;
        if (auto it = hl_node.find(o.parent); it != hl_node.end()) {
            pid = it->second;
        } else if (by_id.count(o.parent)) {
            pid = story_node(o.parent);
        } else {
            throw InputError("sequence override names unknown parent '" + o.parent + "'");
        }
        seq_for[pid] = &o;
    }

    int next_t = 1;
    auto add = [&](TransitionKind kind, std::vector<std::string> in, std::vector<std::string> out,
                   std::vector<std::string> tasks) {
        net.transitions.push_back(
            {"T" + std::to_string(next_t++), kind, std::move(in), std::move(out), std::move(tasks)});
    };

    // Snapshot: transitions reference nodes by id, the vector itself is stable now.
    for (const auto& p : net.nodes) {
        if (p.level < 1 || p.kind != NodeKind::composite) continue;
        std::vector<const GoalNode*> kids;
        for (const auto* c : net.children(p.id)) {
            if (c->cut_across) {
                add(TransitionKind::sequence, {p.id}, {c->id}, tasks_of(*c));
            } else {
                kids.push_back(c);
            }
        }
        if (kids.empty()) continue;

        if (auto it = seq_for.find(p.id); it != seq_for.end()) {
            const SequenceOverride& o = *it->second;
            std::vector<const GoalNode*> chain = kids;
            if (!o.order.empty()) {
                if (o.order.size() != kids.size()) {
                    throw InputError("sequence override for '" + o.parent + "' must list every child");
                }
                chain.clear();
                for (const auto& sid : o.order) {
                    auto k = std::find_if(kids.begin(), kids.end(),
                                          [&](const GoalNode* g) { return g->id == story_node(sid); });
                    if (k == kids.end()) {
                        throw InputError("sequence override for '" + o.parent + "' lists non-child " + sid);
                    }
                    chain.push_back(*k);
                }
            }
            add(TransitionKind::sequence, {p.id}, {chain.front()->id}, tasks_of(*chain.front()));
            for (std::size_t k = 1; k < chain.size(); ++k) {
                add(TransitionKind::sequence, {chain[k - 1]->id}, {chain[k]->id},
                    o.tasks.empty() ? tasks_of(*chain[k]) : o.tasks);
            }
        } else if (kids.size() == 1) {
            add(TransitionKind::sequence, {p.id}, {kids.front()->id}, tasks_of(*kids.front()));
        } else {
            std::vector<std::string> outs;
            std::vector<std::string> tasks;
            for (const auto* c : kids) {
                outs.push_back(c->id);
                auto t = tasks_of(*c);
                tasks.insert(tasks.end(), t.begin(), t.end());
            }
            add(TransitionKind::concurrency, {p.id}, outs, std::move(tasks));
            add(TransitionKind::synchronization, outs, {p.id}, {});
        }
    }

    for (const auto& s : stories) {
        if (s.tasks.empty()) continue;
        GetCard card;
        card.goal_id = story_node(s.id);
        card.tasks = s.tasks;
        if (auto it = options.environment.find(s.id); it != options.environment.end()) {
            card.environment_variables = it->second;
        }
        net.cards.push_back(std::move(card));
    }
    return net;
}

std::vector<Violation> validate_net(const GoalNet& net) {
    std::vector<Violation> out;
    auto fail = [&](std::string where, std::string what) { out.push_back({std::move(where), std::move(what)}); };

    std::map<std::string, const GoalNode*> by_id;
    for (const auto& n : net.nodes) {
        if (!by_id.emplace(n.id, &n).second) fail(n.id, "duplicate node id");
    }
    const GoalNode* root = net.find(net.root);
    if (!root) {
        fail(net.root, "root node missing");
        return out;
    }
    if (root->level != 0) fail(root->id, "root must be level 0");
    if (root->parent) fail(root->id, "root must not have a parent");

    std::map<std::string, int> child_count;
    for (const auto& n : net.nodes) {
        if (n.id == net.root || !n.parent) continue;
        auto it = by_id.find(*n.parent);
        if (it == by_id.end()) {
            fail(n.id, "parent " + *n.parent + " does not exist");
            continue;
        }
        ++child_count[*n.parent];
        const GoalNode& p = *it->second;
        if (p.kind != NodeKind::composite) fail(n.id, "parent " + p.id + " is not composite");
        if (n.cut_across) {
            if (n.level <= p.level) fail(n.id, "cut-across node must sit below its parent");
        } else if (n.level != p.level + 1) {
            fail(n.id, "level " + std::to_string(n.level) + " is not parent level + 1");
        }
    }
    for (const auto& n : net.nodes) {
        const int kids = child_count.count(n.id) ? child_count[n.id] : 0;
        if (n.kind == NodeKind::composite && kids == 0) fail(n.id, "composite node has no children");
        if (n.kind == NodeKind::atomic && kids > 0) fail(n.id, "atomic node has children");
    }

    for (const auto& t : net.transitions) {
        const std::size_t in = t.inputs.size(), outn = t.outputs.size();
        switch (t.kind) {
            case TransitionKind::sequence:
                if (in != 1 || outn != 1) fail(t.id, "sequence transition needs exactly 1 input and 1 output");
                break;
            case TransitionKind::concurrency:
                if (in < 1 || outn < 2) fail(t.id, "concurrency transition needs >= 2 outputs");
                break;
            case TransitionKind::synchronization:
                if (in < 2 || outn < 1) fail(t.id, "synchronization transition needs >= 2 inputs");
                break;
        }
        bool resolved = true;
        for (const auto* side : {&t.inputs, &t.outputs}) {
            for (const auto& id : *side) {
                if (!by_id.count(id)) {
                    fail(t.id, "references unknown node " + id);
                    resolved = false;
                }
            }
        }
        if (!resolved) continue;
        for (const auto& a : t.inputs) {
            for (const auto& b : t.outputs) {
                const GoalNode& na = *by_id.at(a);
                const GoalNode& nb = *by_id.at(b);
                if (na.cut_across || nb.cut_across) continue;
                if (std::abs(na.level - nb.level) > 1) {
                    fail(t.id, "link " + a + " -> " + b + " skips a level");
                }
            }
        }
    }

    // Reachability over containment and transition edges.
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& n : net.nodes) {
        if (n.parent) adj[*n.parent].push_back(n.id);
    }
    for (const auto& t : net.transitions) {
        for (const auto& a : t.inputs) {
            for (const auto& b : t.outputs) adj[a].push_back(b);
        }
    }
    std::set<std::string> seen{net.root};
    std::queue<std::string> q;
    q.push(net.root);
    while (!q.empty()) {
        const auto cur = q.front();
        q.pop();
        for (const auto& nxt : adj[cur]) {
            if (seen.insert(nxt).second) q.push(nxt);
        }
    }
    for (const auto& n : net.nodes) {
        if (!seen.count(n.id)) fail(n.id, "unreachable from root");
    }

    for (const auto& c : net.cards) {
        if (!by_id.count(c.goal_id)) fail(c.goal_id, "GET card goal does not resolve");
        if (c.tasks.empty()) fail(c.goal_id, "GET card has no tasks");
    }
    return out;
}

json to_json(const GoalNet& net) {
    json nodes = json::array();
    for (const auto& n : net.nodes) {
        json j{{"id", n.id},
               {"label", n.label},
               {"kind", to_string(n.kind)},
               {"level", n.level},
               {"cut_across", n.cut_across}};
        j["parent"] = n.parent ? json(*n.parent) : json(nullptr);
        nodes.push_back(std::move(j));
    }
    json transitions = json::array();
    for (const auto& t : net.transitions) {
        transitions.push_back({{"id", t.id},
                               {"kind", to_string(t.kind)},
                               {"inputs", t.inputs},
                               {"outputs", t.outputs},
                               {"tasks", t.tasks}});
    }
    json cards = json::array();
    for (const auto& c : net.cards) {
        json env = json::array();
        for (const auto& [k, v] : c.environment_variables) env.push_back({k, v});
        cards.push_back({{"goal_id", c.goal_id}, {"environment", env}, {"tasks", c.tasks}});
    }
    return json{{"root", net.root}, {"nodes", nodes}, {"transitions", transitions}, {"cards", cards}};
}

GoalNet from_json(const json& doc) {
    GoalNet net;
    try {
        net.root = doc.at("root").get<std::string>();
        for (const auto& j : doc.at("nodes")) {
            GoalNode n;
            n.id = j.at("id").get<std::string>();
            n.label = j.at("label").get<std::string>();
            const auto kind = j.at("kind").get<std::string>();
            if (kind != "atomic" && kind != "composite") throw InputError("unknown node kind: " + kind);
            n.kind = kind == "composite" ? NodeKind::composite : NodeKind::atomic;
            n.level = j.at("level").get<int>();
            n.cut_across = j.value("cut_across", false);
            if (j.contains("parent") && !j.at("parent").is_null()) n.parent = j.at("parent").get<std::string>();
            net.nodes.push_back(std::move(n));
        }
        for (const auto& j : doc.value("transitions", json::array())) {
            Transition t;
            t.id = j.at("id").get<std::string>();
            t.kind = parse_transition_kind(j.at("kind").get<std::string>());
            t.inputs = j.at("inputs").get<std::vector<std::string>>();
            t.outputs = j.at("outputs").get<std::vector<std::string>>();
            t.tasks = j.value("tasks", std::vector<std::string>{});
            net.transitions.push_back(std::move(t));
        }
        for (const auto& j : doc.value("cards", json::array())) {
            GetCard c;
            c.goal_id = j.at("goal_id").get<std::string>();
            for (const auto& kv : j.value("environment", json::array())) {
                c.environment_variables.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
            }
            c.tasks = j.value("tasks", std::vector<std::string>{});
            net.cards.push_back(std::move(c));
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed goal net document: ") + e.what());
    }

    if (!net.find(net.root)) throw InputError("goal net document: root " + net.root + " is not a node");
    for (const auto& n : net.nodes) {
        if (n.parent && !net.find(*n.parent)) {
            throw InputError("goal net document: node " + n.id + " references missing parent " + *n.parent);
        }
    }
    for (const auto& t : net.transitions) {
        for (const auto* side : {&t.inputs, &t.outputs}) {
            for (const auto& id : *side) {
                if (!net.find(id)) {
                    throw InputError("goal net document: transition " + t.id + " references missing node " + id);
                }
            }
        }
    }
    for (const auto& c : net.cards) {
        if (!net.find(c.goal_id)) throw InputError("goal net document: card for missing node " + c.goal_id);
    }
    return net;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

std::string to_dot(const GoalNet& net) {
    std::ostringstream out;
    out << "digraph goal_net {\n"
        << "  rankdir=TB;\n"
        << "  node [fontname=\"Helvetica\"];\n";
    for (const auto& n : net.nodes) {
        out << "  \"" << dot_escape(n.id) << "\" [label=\"" << dot_escape(n.label) << "\", shape="
            << (n.kind == NodeKind::composite ? "box, style=\"rounded" : "ellipse, style=\"solid")
            << (n.cut_across ? ",dashed" : "") << "\", level=" << n.level << "];\n";
    }
    for (const auto& n : net.nodes) {
        if (n.parent) {
            out << "  \"" << dot_escape(*n.parent) << "\" -> \"" << dot_escape(n.id)
                << "\" [style=dotted, color=gray, arrowhead=none];\n";
        }
    }
    for (const auto& t : net.transitions) {
        const char* style = t.kind == TransitionKind::sequence      ? "shape=rect, width=0.3, height=0.1, style=filled, fillcolor=black"
                            : t.kind == TransitionKind::concurrency ? "shape=rect, width=0.6, height=0.1, style=filled, fillcolor=blue"
                                                                    : "shape=rect, width=0.6, height=0.1, style=filled, fillcolor=red";
        out << "  \"" << dot_escape(t.id) << "\" [label=\"\", xlabel=\"" << to_string(t.kind) << "\", " << style
            << "];\n";
        for (const auto& a : t.inputs) out << "  \"" << dot_escape(a) << "\" -> \"" << dot_escape(t.id) << "\";\n";
        for (const auto& b : t.outputs) out << "  \"" << dot_escape(t.id) << "\" -> \"" << dot_escape(b) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::vector<UserStory> parse_story_lines(const std::string& text) {
    std::vector<UserStory> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (t.front() == '-') {
            if (out.empty()) throw InputError("line " + std::to_string(lineno) + ": task before any story");
            out.back().tasks.push_back(trim(std::string_view(t).substr(1)));
            continue;
        }
        const auto bar = t.find('|');
        if (bar == std::string::npos) {
            throw InputError("line " + std::to_string(lineno) + ": expected \"<id> | <story>\"");
        }
        try {
            UserStory s = parse_story(std::string_view(t).substr(bar + 1));
            s.id = trim(std::string_view(t).substr(0, bar));
            out.push_back(std::move(s));
        } catch (const ParseError& e) {
            throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<UserStory> load_stories(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open story corpus: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') return parse_story_lines(text);

    std::vector<UserStory> out;
    try {
        const json doc = json::parse(text);
        for (const auto& j : doc.at("stories")) {
            const auto id = j.at("id").get<std::string>();
            UserStory s;
            try {
                s = parse_story(j.at("text").get<std::string>());
            } catch (const ParseError& e) {
                throw InputError("story " + id + ": " + e.what());
            }
            s.id = id;
            if (j.contains("parent") && !j.at("parent").is_null()) s.parent = j.at("parent").get<std::string>();
            s.tasks = j.value("tasks", std::vector<std::string>{});
            out.push_back(std::move(s));
        }
    } catch (const json::exception& e) {
        throw InputError("malformed story corpus " + path + ": " + e.what());
    }
    return out;
}

GoalSpec goal_spec_from_json(const json& doc) {
    GoalSpec spec;
    try {
        spec.options.root_label = doc.value("root", std::string("Top goal"));
        spec.high_level_goals = doc.at("goals").get<std::vector<std::string>>();
        spec.assignment = doc.at("assignment").get<std::map<std::string, std::string>>();
        for (const auto& j : doc.value("sequences", json::array())) {
            SequenceOverride o;
            o.parent = j.at("parent").get<std::string>();
            o.order = j.value("order", std::vector<std::string>{});
            o.tasks = j.value("tasks", std::vector<std::string>{});
            spec.options.sequences.push_back(std::move(o));
        }
        if (doc.contains("environment")) {
            for (const auto& [story, vars] : doc.at("environment").items()) {
                auto& env = spec.options.environment[story];
                for (const auto& kv : vars) env.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
            }
        }
        spec.options.cut_across = doc.value("cut_across", std::vector<std::string>{});
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed goals document: ") + e.what());
    }
    return spec;
}

GoalSpec load_goal_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open goals file: " + path);
    try {
        return goal_spec_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
        throw InputError("cannot parse goals file " + path + ": " + e.what());
    }
}

}  // namespace agile::goalnet
