#pragma once

// Fuzzy cognitive maps: signed weighted concept graphs iterated through a
// squashing function until they settle on a fixed point or a cycle.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace agile::fcm {

enum class TransformKind { bivalent, trivalent, sigmoid };

struct Transform {
    TransformKind kind = TransformKind::sigmoid;
    double c = 5.0;  // sigmoid steepness

    static Transform bivalent() { return {TransformKind::bivalent, 5.0}; }
    static Transform trivalent() { return {TransformKind::trivalent, 5.0}; }
    static Transform sigmoid(double c = 5.0) { return {TransformKind::sigmoid, c}; }

    bool operator==(const Transform&) const = default;
};

std::string_view to_string(TransformKind k);
TransformKind parse_transform(std::string_view s);

/// Squashes a node's weighted input sum.
///   bivalent:  0 for n <= 0, else 1
///   trivalent: -1 for n <= -0.5, 1 for n >= 0.5, else 0
///   sigmoid:   1 / (1 + exp(-c n))
double transform(const Transform& t, double n);

/// Concept graph. weights[i][j] is the causal edge from node i to node j.
/// Self-edges are not allowed: a node's next value depends only on the
/// other nodes' current values.
class ConceptMap {
public:
    ConceptMap() = default;
    // Throws std::invalid_argument when the matrix is not square, does not
    // match the labels, has |w| > 1, or has a non-zero diagonal.
    ConceptMap(std::vector<std::string> labels, std::vector<std::vector<double>> weights,
               Transform t = Transform::sigmoid());

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<double>>& weights() const { return weights_; }
    double weight(std::size_t from, std::size_t to) const { return weights_[from][to]; }
    const Transform& transform() const { return transform_; }

    ConceptMap with_transform(Transform t) const;
    std::optional<std::size_t> index_of(std::string_view label) const;

    bool operator==(const ConceptMap&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> weights_;
    Transform transform_;
};

struct StateVector {
    std::vector<double> values;
    int iteration = 0;

    bool operator==(const StateVector&) const = default;
};

enum class Terminal { fixed_point, limit_cycle, max_iterations };

std::string_view to_string(Terminal t);

struct Trajectory {
    std::vector<StateVector> states;
    Terminal terminal = Terminal::max_iterations;
    // For limit cycles, the iteration the final state repeats.
    std::optional<int> cycle_start;

    const StateVector& final_state() const { return states.back(); }
};

/// One synchronous update: every node reads only the previous state.
/// Throws std::invalid_argument on a length mismatch.
StateVector step(const ConceptMap& map, const StateVector& state);

struct RunOptions {
    int max_iter = 200;
    double tol = 1e-6;
};

/// Iterates `step` from `initial` (included as the first state). Stops at a
/// fixed point (max-norm change below tol), on revisiting an earlier state
/// within tol, or after max_iter steps.
Trajectory run(const ConceptMap& map, const StateVector& initial, RunOptions options = {});

/// Same as `run` but always performs exactly `iterations` steps; the
/// terminal verdict is still reported from the first detection.
Trajectory run_fixed(const ConceptMap& map, const StateVector& initial, int iterations,
                     double tol = 1e-6);

// Questionnaire-based weight elicitation. Each answer states how strongly a
// change in `from` drives `to`; the five levels map onto 0, .25, .5, .75, 1.
enum class Likert { not_at_all, a_little, moderately, mostly, completely };

Likert parse_likert(std::string_view s);
double likert_magnitude(Likert level);

struct Answer {
    std::string from;
    std::string to;
    int sign = +1;
    Likert level = Likert::not_at_all;
};

/// Builds a weight matrix over `labels`; unanswered pairs get 0. Throws
/// std::invalid_argument on a duplicate pair, a self pair, or an unknown label.
std::vector<std::vector<double>> elicit_weights(const std::vector<std::string>& labels,
                                                const std::vector<Answer>& answers);

// Map documents: {"labels": [...], "weights": [[...], ...] or flat row-major,
// "transform": "sigmoid"|"bivalent"|"trivalent", "c": 5}.
ConceptMap map_from_json(const nlohmann::json& j);
nlohmann::json map_to_json(const ConceptMap& map);
ConceptMap load_map(const std::string& path);

/// Names of the built-in mood maps: michael_scenario1, grace_scenario1,
/// michael_scenario2, grace_scenario2.
const std::vector<std::string>& bundled_map_names();
ConceptMap bundled_map(std::string_view name);
/// The starting state the bundled map was elicited for: (0.5, 0, 0) for the
/// three-node maps, the matching three-node equilibrium plus Difficulty = 1
/// for the four-node maps.
StateVector bundled_initial(std::string_view name);

/// CSV with header "iteration,<label>,..." and one row per state.
std::string trajectory_csv(const ConceptMap& map, const Trajectory& trajectory);

}  // namespace agile::fcm
