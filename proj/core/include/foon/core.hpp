#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace foon {

/// Canonical form for object labels, state names, ingredient and utensil
/// labels: trimmed, internal whitespace collapsed to single spaces, ASCII
/// lowercased. Control bytes are dropped. Hand-authored knowledge files mix
/// tabs, double spaces and capitalization; everything downstream compares
/// canonical forms only.
std::string canonical_label(std::string_view text);

/// Motion labels keep their case; they are only trimmed.
std::string canonical_motion(std::string_view text);

/// One state line on an object: a name, optionally decorated with an
/// ingredient set ("contains {a, b}") or a container ("in [bowl]").
/// At most one decoration may be present.
struct StateTag {
    std::string name;
    std::optional<std::vector<std::string>> ingredients;  // sorted, deduped
    std::optional<std::string> container;

    static StateTag plain(std::string_view name);
    static StateTag with_ingredients(std::string_view name, std::vector<std::string> ingredients);
    static StateTag with_container(std::string_view name, std::string_view container);

    /// Deterministic identity string; two tags are interchangeable iff their
    /// keys are equal.
    std::string key() const;

    bool operator==(const StateTag& other) const;
};

/// An object label plus its state tags. Tag order is preserved from the
/// source text but carries no meaning: nodes compare as (label, state
/// multiset).
struct ObjectNode {
    std::string label;
    std::vector<StateTag> states;

    bool operator==(const ObjectNode& other) const;
};

struct MotionNode {
    std::string label;

    bool operator==(const MotionNode& other) const = default;
};

/// The atomic cooking action: input objects, exactly one motion, output
/// objects.
struct FunctionalUnit {
    std::vector<ObjectNode> inputs;
    MotionNode motion;
    std::vector<ObjectNode> outputs;
};

/// A goal or kitchen-item description. States are plain state names;
/// ingredients and container describe what the item must hold / sit in.
struct ObjectSpec {
    std::string label;
    std::vector<std::string> states;       // sorted, deduped
    std::vector<std::string> ingredients;  // sorted, deduped
    std::optional<std::string> container;

    bool operator==(const ObjectSpec& other) const = default;
};

/// Convenience factories; all canonicalize their arguments.
ObjectNode make_node(std::string_view label, std::vector<StateTag> states = {});
ObjectSpec make_spec(std::string_view label, std::vector<std::string> states = {},
                     std::vector<std::string> ingredients = {},
                     std::optional<std::string> container = std::nullopt);

/// Canonical identity string for a node: label plus lexicographically sorted
/// state keys. object_key(a) == object_key(b) iff nodes_equal(a, b).
std::string object_key(const ObjectNode& node);

/// Canonical identity string for a whole unit (input multiset, motion,
/// output multiset).
std::string unit_key(const FunctionalUnit& unit);

bool nodes_equal(const ObjectNode& a, const ObjectNode& b);
bool units_equal(const FunctionalUnit& a, const FunctionalUnit& b);

/// Subset match of a node against a spec: labels equal, every spec state
/// name appears among the node's tag names, spec ingredients are covered by
/// the union of the node's ingredient sets, and the spec container (if any)
/// appears as a container tag. Under-specified specs match richer nodes.
bool matches_spec(const ObjectNode& node, const ObjectSpec& spec);

/// The spec form of a node, used to look up producers for it: plain
/// (undecorated) tag names become states, ingredient sets are unioned, and
/// the first container tag (if any) becomes the container.
ObjectSpec spec_of(const ObjectNode& node);

}  // namespace foon
