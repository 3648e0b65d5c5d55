#include "foon/core.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace foon {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }
bool is_control(unsigned char c) { return c < 0x20 || c == 0x7f; }

// Separators for identity keys. Canonicalization drops control bytes, so
// these cannot occur in stored labels or names and the keys stay injective.
constexpr char kStateSep = '\x01';
constexpr char kIngredientMark = '\x02';
constexpr char kIngredientSep = '\x03';
constexpr char kContainerMark = '\x04';
constexpr char kUnitSep = '\x05';
constexpr char kNodeSep = '\x06';

// Trim, collapse internal whitespace runs to single spaces, drop control
// bytes, optionally ASCII-lowercase.
std::string clean(std::string_view text, bool lower) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (unsigned char c : text) {
        if (is_space(c)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (is_control(c)) continue;
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(lower ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
    }
    return out;
}

std::vector<std::string> canonical_set(std::vector<std::string> values) {
    for (auto& v : values) v = canonical_label(v);
    std::erase(values, std::string{});
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

void check_state_name(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("state name is empty");
    if (name.find_first_of("{}[]") != std::string::npos)
        throw std::invalid_argument("state name contains a brace or bracket: " + name);
}

}  // namespace

std::string canonical_label(std::string_view text) { return clean(text, true); }

std::string canonical_motion(std::string_view text) { return clean(text, false); }

StateTag StateTag::plain(std::string_view name) {
    StateTag tag;
    tag.name = canonical_label(name);
    check_state_name(tag.name);
    return tag;
}

StateTag StateTag::with_ingredients(std::string_view name, std::vector<std::string> ingredients) {
    StateTag tag = plain(name);
    tag.ingredients = canonical_set(std::move(ingredients));
    return tag;
}

StateTag StateTag::with_container(std::string_view name, std::string_view container) {
    StateTag tag = plain(name);
    auto label = canonical_label(container);
    if (label.empty()) throw std::invalid_argument("container label is empty");
    tag.container = std::move(label);
    return tag;
}

std::string StateTag::key() const {
    std::string key = name;
    if (ingredients) {
        key.push_back(kIngredientMark);
        for (std::size_t i = 0; i < ingredients->size(); ++i) {
            if (i > 0) key.push_back(kIngredientSep);
            key += (*ingredients)[i];
        }
    }
    if (container) {
        key.push_back(kContainerMark);
        key += *container;
    }
    return key;
}

bool StateTag::operator==(const StateTag& other) const {
    return name == other.name && ingredients == other.ingredients && container == other.container;
}

bool ObjectNode::operator==(const ObjectNode& other) const { return nodes_equal(*this, other); }

ObjectNode make_node(std::string_view label, std::vector<StateTag> states) {
    ObjectNode node;
    node.label = canonical_label(label);
    if (node.label.empty()) throw std::invalid_argument("object label is empty");
    node.states = std::move(states);
    return node;
}

ObjectSpec make_spec(std::string_view label, std::vector<std::string> states,
                     std::vector<std::string> ingredients, std::optional<std::string> container) {
    ObjectSpec spec;
    spec.label = canonical_label(label);
    if (spec.label.empty()) throw std::invalid_argument("spec label is empty");
    spec.states = canonical_set(std::move(states));
    spec.ingredients = canonical_set(std::move(ingredients));
    if (container) {
        auto c = canonical_label(*container);
        if (!c.empty()) spec.container = std::move(c);
    }
    return spec;
}

namespace {

std::vector<std::string> sorted_state_keys(const ObjectNode& node) {
    std::vector<std::string> keys;
    keys.reserve(node.states.size());
    for (const auto& tag : node.states) keys.push_back(tag.key());
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

std::string object_key(const ObjectNode& node) {
    std::string key = node.label;
    for (const auto& state_key : sorted_state_keys(node)) {
        key.push_back(kStateSep);
        key += state_key;
    }
    return key;
}

std::string unit_key(const FunctionalUnit& unit) {
    auto side = [](const std::vector<ObjectNode>& nodes) {
        std::vector<std::string> keys;
        keys.reserve(nodes.size());
        for (const auto& node : nodes) keys.push_back(object_key(node));
        std::sort(keys.begin(), keys.end());
        std::string joined;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (i > 0) joined.push_back(kNodeSep);
            joined += keys[i];
        }
        return joined;
    };
    std::string key = side(unit.inputs);
    key.push_back(kUnitSep);
    key += unit.motion.label;
    key.push_back(kUnitSep);
    key += side(unit.outputs);
    return key;
}

bool nodes_equal(const ObjectNode& a, const ObjectNode& b) {
    if (a.label != b.label || a.states.size() != b.states.size()) return false;
    return sorted_state_keys(a) == sorted_state_keys(b);
}

bool units_equal(const FunctionalUnit& a, const FunctionalUnit& b) {
    if (a.motion.label != b.motion.label) return false;
    if (a.inputs.size() != b.inputs.size() || a.outputs.size() != b.outputs.size()) return false;
    return unit_key(a) == unit_key(b);
}

bool matches_spec(const ObjectNode& node, const ObjectSpec& spec) {
    if (node.label != spec.label) return false;
    for (const auto& wanted : spec.states) {
        bool found = std::any_of(node.states.begin(), node.states.end(),
                                 [&](const StateTag& tag) { return tag.name == wanted; });
        if (!found) return false;
    }
    for (const auto& wanted : spec.ingredients) {
        bool found = std::any_of(node.states.begin(), node.states.end(), [&](const StateTag& tag) {
            return tag.ingredients &&
                   std::find(tag.ingredients->begin(), tag.ingredients->end(), wanted) !=
                       tag.ingredients->end();
        });
        if (!found) return false;
    }
    if (spec.container) {
        bool found = std::any_of(node.states.begin(), node.states.end(), [&](const StateTag& tag) {
            return tag.container && *tag.container == *spec.container;
        });
        if (!found) return false;
    }
    return true;
}

ObjectSpec spec_of(const ObjectNode& node) {
    ObjectSpec spec;
    spec.label = node.label;
    for (const auto& tag : node.states) {
        if (!tag.ingredients && !tag.container) {
            spec.states.push_back(tag.name);
        }
        if (tag.ingredients) {
            spec.ingredients.insert(spec.ingredients.end(), tag.ingredients->begin(),
                                    tag.ingredients->end());
        }
        if (tag.container && !spec.container) spec.container = *tag.container;
    }
    std::sort(spec.states.begin(), spec.states.end());
    spec.states.erase(std::unique(spec.states.begin(), spec.states.end()), spec.states.end());
    std::sort(spec.ingredients.begin(), spec.ingredients.end());
    spec.ingredients.erase(std::unique(spec.ingredients.begin(), spec.ingredients.end()),
                           spec.ingredients.end());
    return spec;
}

}  // namespace foon
