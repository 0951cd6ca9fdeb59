#include "agile/fcm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "agile/core.hpp"

namespace agile::fcm {

using nlohmann::json;

std::string_view to_string(TransformKind k) {
    switch (k) {
        case TransformKind::bivalent: return "bivalent";
        case TransformKind::trivalent: return "trivalent";
        case TransformKind::sigmoid: return "sigmoid";
    }
    return "?";
}

TransformKind parse_transform(std::string_view s) {
    for (auto k : {TransformKind::bivalent, TransformKind::trivalent, TransformKind::sigmoid}) {
        if (to_string(k) == s) return k;
    }
    throw InputError("unknown transform: " + std::string(s));
}

double transform(const Transform& t, double n) {
    switch (t.kind) {
        case TransformKind::bivalent:
            return n <= 0.0 ? 0.0 : 1.0;
        case TransformKind::trivalent:
            if (n <= -0.5) return -1.0;
            if (n >= 0.5) return 1.0;
            return 0.0;
        case TransformKind::sigmoid:
            return 1.0 / (1.0 + std::exp(-t.c * n));
    }
    return 0.0;
}

ConceptMap::ConceptMap(std::vector<std::string> labels, std::vector<std::vector<double>> weights,
                       Transform t)
    : labels_(std::move(labels)), weights_(std::move(weights)), transform_(t) {
    const std::size_t n = labels_.size();
    if (weights_.size() != n) {
        throw std::invalid_argument("weight matrix has " + std::to_string(weights_.size()) +
                                    " rows for " + std::to_string(n) + " labels");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (weights_[i].size() != n) {
            throw std::invalid_argument("weight matrix row " + std::to_string(i) + " is not length " +
                                        std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const double w = weights_[i][j];
            if (!std::isfinite(w) || std::abs(w) > 1.0) {
                throw std::invalid_argument("weight " + labels_[i] + "->" + labels_[j] +
                                            " outside [-1,1]");
            }
        }
        if (weights_[i][i] != 0.0) {
            throw std::invalid_argument("self-feedback on node " + labels_[i] + " is not allowed");
        }
    }
    if (transform_.kind == TransformKind::sigmoid && !(transform_.c > 0.0)) {
        throw std::invalid_argument("sigmoid steepness must be > 0");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) throw std::invalid_argument("duplicate node label");
}

ConceptMap ConceptMap::with_transform(Transform t) const {
    return ConceptMap(labels_, weights_, t);
}

std::optional<std::size_t> ConceptMap::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

std::string_view to_string(Terminal t) {
    switch (t) {
        case Terminal::fixed_point: return "fixed-point";
        case Terminal::limit_cycle: return "limit-cycle";
        case Terminal::max_iterations: return "max-iterations";
    }
    return "?";
}

StateVector step(const ConceptMap& map, const StateVector& state) {
    const std::size_t n = map.size();
    if (state.values.size() != n) {
        throw std::invalid_argument("state has " + std::to_string(state.values.size()) +
                                    " values for a " + std::to_string(n) + "-node map");
    }
    StateVector next;
    next.iteration = state.iteration + 1;
    next.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += map.weight(i, j) * state.values[i];
        next.values[j] = transform(map.transform(), sum);
    }
    return next;
}

namespace {

double max_abs_diff(const StateVector& a, const StateVector& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        d = std::max(d, std::abs(a.values[i] - b.values[i]));
    }
    return d;
}

// Verdict for the newest state, if it terminates the run.
std::optional<std::pair<Terminal, int>> classify(const std::vector<StateVector>& states, double tol) {
    const auto& last = states.back();
    const auto& prev = states[states.size() - 2];
    if (max_abs_diff(last, prev) < tol) return std::pair{Terminal::fixed_point, prev.iteration};
    for (std::size_t k = 0; k + 2 < states.size(); ++k) {
        if (max_abs_diff(last, states[k]) < tol) {
            return std::pair{Terminal::limit_cycle, states[k].iteration};
        }
    }
    return std::nullopt;
}

void check_initial(const ConceptMap& map, const StateVector& initial) {
    if (initial.values.size() != map.size()) {
        throw std::invalid_argument("initial state has " + std::to_string(initial.values.size()) +
                                    " values for a " + std::to_string(map.size()) + "-node map");
    }
    for (double v : initial.values) {
        if (!std::isfinite(v)) throw std::invalid_argument("initial state is not finite");
    }
}

}  // namespace

Trajectory run(const ConceptMap& map, const StateVector& initial, RunOptions options) {
    if (options.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    check_initial(map, initial);

    Trajectory t;
    t.states.push_back(initial);
    for (int k = 0; k < options.max_iter; ++k) {
        t.states.push_back(step(map, t.states.back()));
        if (auto verdict = classify(t.states, options.tol)) {
            t.terminal = verdict->first;
            if (t.terminal == Terminal::limit_cycle) t.cycle_start = verdict->second;
            return t;
        }
    }
    t.terminal = Terminal::max_iterations;
    return t;
}

Trajectory run_fixed(const ConceptMap& map, const StateVector& initial, int iterations,
                     double tol) {
    if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
    check_initial(map, initial);

    Trajectory t;
    t.states.push_back(initial);
    bool decided = false;
    for (int k = 0; k < iterations; ++k) {
        t.states.push_back(step(map, t.states.back()));
        if (!decided) {
            if (auto verdict = classify(t.states, tol)) {
                decided = true;
                t.terminal = verdict->first;
                if (t.terminal == Terminal::limit_cycle) t.cycle_start = verdict->second;
            }
        }
    }
    return t;
}

Likert parse_likert(std::string_view s) {
    std::string low(s);
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    if (low == "not at all") return Likert::not_at_all;
    if (low == "a little") return Likert::a_little;
    if (low == "moderately") return Likert::moderately;
    if (low == "mostly") return Likert::mostly;
    if (low == "completely") return Likert::completely;
    throw InputError("unknown likert level: " + std::string(s));
}

double likert_magnitude(Likert level) {
    return 0.25 * static_cast<int>(level);
}

std::vector<std::vector<double>> elicit_weights(const std::vector<std::string>& labels,
                                                const std::vector<Answer>& answers) {
    const std::size_t n = labels.size();
    auto index = [&](const std::string& label) {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw std::invalid_argument("unknown node in answer: " + label);
        return static_cast<std::size_t>(it - labels.begin());
    };
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    std::set<std::pair<std::size_t, std::size_t>> answered;
    for (const auto& a : answers) {
        const auto i = index(a.from);
        const auto j = index(a.to);
        if (i == j) throw std::invalid_argument("self edge in answer: " + a.from);
        if (!answered.insert({i, j}).second) {
            throw std::invalid_argument("duplicate answer for " + a.from + " -> " + a.to);
        }
        if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("answer sign must be +1 or -1");
        w[i][j] = a.sign * likert_magnitude(a.level);
    }
    return w;
}

ConceptMap map_from_json(const json& j) {
    try {
        auto labels = j.at("labels").get<std::vector<std::string>>();
        const std::size_t n = labels.size();
        std::vector<std::vector<double>> weights;
        const auto& w = j.at("weights");
        if (!w.empty() && w.front().is_array()) {
            weights = w.get<std::vector<std::vector<double>>>();
        } else {
            auto flat = w.get<std::vector<double>>();
            if (flat.size() != n * n) {
                throw InputError("flat weight list has " + std::to_string(flat.size()) +
                                 " entries, expected " + std::to_string(n * n));
            }
            weights.assign(n, std::vector<double>(n));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < n; ++k) weights[i][k] = flat[i * n + k];
            }
        }
        Transform t;
        t.kind = parse_transform(j.value("transform", std::string("sigmoid")));
        t.c = j.value("c", 5.0);
        return ConceptMap(std::move(labels), std::move(weights), t);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed map document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("invalid map: ") + e.what());
    }
}

json map_to_json(const ConceptMap& map) {
    return json{{"labels", map.labels()},
                {"weights", map.weights()},
                {"transform", to_string(map.transform().kind)},
                {"c", map.transform().c}};
}

ConceptMap load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open map file: " + path);
    try {
        return map_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
        throw InputError("cannot parse map file " + path + ": " + e.what());
    }
}

const std::vector<std::string>& bundled_map_names() {
    static const std::vector<std::string> names{"michael_scenario1", "grace_scenario1",
                                                "michael_scenario2", "grace_scenario2"};
    return names;
}

ConceptMap bundled_map(std::string_view name) {
    const std::vector<std::string> three{"Mood", "Progress", "Quality"};
    const std::vector<std::string> four{"Mood", "Progress", "Quality", "Difficulty"};
    if (name == "michael_scenario1") {
        return ConceptMap(three, {{0, 0.2, 0.1}, {0.3, 0, 0.2}, {0.3, 0.2, 0}});
    }
    if (name == "grace_scenario1") {
        return ConceptMap(three, {{0, 0.7, 0.3}, {0.5, 0, 0.2}, {0.6, 0.2, 0}});
    }
    if (name == "michael_scenario2") {
        return ConceptMap(four, {{0, 0.2, 0.1, 0},
                                 {0.3, 0, 0.2, 0},
                                 {0.3, 0.2, 0, 0},
                                 {-0.2, -0.3, 0, 0}});
    }
    if (name == "grace_scenario2") {
        return ConceptMap(four, {{0, 0.7, 0.3, 0},
                                 {0.5, 0, 0.2, 0},
                                 {0.6, 0.2, 0, 0},
                                 {-0.8, -0.3, 0, 0}});
    }
    throw InputError("unknown bundled map: " + std::string(name));
}

StateVector bundled_initial(std::string_view name) {
    if (name == "michael_scenario1" || name == "grace_scenario1") return {{0.5, 0.0, 0.0}, 0};
    if (name == "michael_scenario2") return {{0.920579509, 0.846519301, 0.786978702, 1.0}, 0};
    if (name == "grace_scenario2") return {{0.994717128, 0.987922232, 0.92272765, 1.0}, 0};
    throw InputError("unknown bundled map: " + std::string(name));
}

std::string trajectory_csv(const ConceptMap& map, const Trajectory& trajectory) {
    std::ostringstream out;
    out << "iteration";
    for (const auto& l : map.labels()) out << ',' << l;
    out << '\n';
    out << std::setprecision(9);
    for (const auto& s : trajectory.states) {
        out << s.iteration;
        for (double v : s.values) out << ',' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace agile::fcm
