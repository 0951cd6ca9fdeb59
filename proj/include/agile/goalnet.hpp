#pragma once

// Goal Net requirements models built from user stories: a root goal, the
// stakeholders' high-level goals, the goals hidden in parent stories, and
// the leaf-story goals, linked by sequence, concurrency and synchronization
// transitions. GET cards attach environment variables and tasks to goals.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agile/core.hpp"
#include "json.hpp"

namespace agile::goalnet {

class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t position)
        : InputError(message + " (at offset " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct UserStory {
    std::string id;
    std::string role;
    std::string goal;
    std::optional<std::string> benefit;
    std::optional<std::string> parent;
    std::vector<std::string> tasks;

    bool operator==(const UserStory&) const = default;
};

/// Parses "As a <role>, I want to <goal> [so that <benefit>]". Keywords are
/// matched case-insensitively and runs of whitespace collapse to one space.
/// ParseError positions index into the whitespace-normalized text.
UserStory parse_story(std::string_view text);

/// Canonical template text for a story ("As a"/"As an" by the role's first letter).
std::string render_story(const UserStory& story);

enum class NodeKind { atomic, composite };
enum class TransitionKind { sequence, concurrency, synchronization };

std::string_view to_string(NodeKind k);
std::string_view to_string(TransitionKind k);
TransitionKind parse_transition_kind(std::string_view s);

struct GoalNode {
    std::string id;
    std::string label;
    NodeKind kind = NodeKind::atomic;
    int level = 0;
    bool cut_across = false;
    std::optional<std::string> parent;

    bool operator==(const GoalNode&) const = default;
};

struct Transition {
    std::string id;
    TransitionKind kind = TransitionKind::sequence;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<std::string> tasks;

    bool operator==(const Transition&) const = default;
};

struct GetCard {
    std::string goal_id;
    std::vector<std::pair<std::string, std::string>> environment_variables;
    std::vector<std::string> tasks;

    bool operator==(const GetCard&) const = default;
};

struct GoalNet {
    std::string root;
    std::vector<GoalNode> nodes;
    std::vector<Transition> transitions;
    std::vector<GetCard> cards;

    const GoalNode* find(std::string_view id) const;
    const GoalNode* find_by_label(std::string_view label) const;
    std::vector<const GoalNode*> children(std::string_view id) const;
    /// Number of distinct levels (root only = 1).
    int levels() const;

    bool operator==(const GoalNet&) const = default;
};

/// Replaces the default concurrency fan-out under `parent` (a high-level
/// goal label or a story id) with a sequence chain through `order`.
struct SequenceOverride {
    std::string parent;
    std::vector<std::string> order;  // story ids; empty = story id order
    std::vector<std::string> tasks;  // attached to the sibling-to-sibling links
};

struct BuildOptions {
    std::string root_label = "Top goal";
    std::vector<SequenceOverride> sequences;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> environment;
    std::vector<std::string> cut_across;  // story ids attached outside the sibling structure
};

/// Three-step construction: a level-0 root with the high-level goals as its
/// level-1 children; each top-level story's goal below its assigned
/// high-level goal; each sub-story's goal below its parent story. Siblings
/// default to a concurrency fan-out joined by a synchronization back to the
/// parent; a single child is reached by one sequence transition. Stories
/// with tasks get a GET card.
///
/// Sub-stories inherit the assignment of their nearest assigned ancestor.
/// Throws InputError for an unassigned story, an assignment to an unknown
/// goal, a missing or cyclic parent, or a duplicate id.
GoalNet build_goal_net(const std::vector<UserStory>& stories,
                       const std::vector<std::string>& high_level_goals,
                       const std::map<std::string, std::string>& assignment,
                       const BuildOptions& options = {});

/// Level consistency, transition arity, reachability from the root and GET
/// card resolution. Empty result means the net is valid.
std::vector<Violation> validate_net(const GoalNet& net);

nlohmann::json to_json(const GoalNet& net);
/// Throws InputError on malformed documents or dangling node references.
GoalNet from_json(const nlohmann::json& doc);

/// Graphviz DOT. Composite goals are boxes, atomic goals ellipses,
/// cut-across goals dashed; transitions are small nodes styled by kind.
std::string to_dot(const GoalNet& net);

// Story corpus files: a JSON document {"stories": [{"id", "text", "parent"?,
// "tasks"?}]}, or plain text with one "<id> | <story>" per line where
// following lines starting with "-" list that story's tasks.
std::vector<UserStory> load_stories(const std::string& path);
std::vector<UserStory> parse_story_lines(const std::string& text);

struct GoalSpec {
    std::vector<std::string> high_level_goals;
    std::map<std::string, std::string> assignment;
    BuildOptions options;
};

// Goals file: {"root": label, "goals": [...], "assignment": {story: goal},
// "sequences": [{"parent", "order", "tasks"}], "environment": {story: [[k, v]]},
// "cut_across": [story ids]}.
GoalSpec load_goal_spec(const std::string& path);
GoalSpec goal_spec_from_json(const nlohmann::json& doc);

}  // namespace agile::goalnet
