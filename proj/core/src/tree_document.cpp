#include "foon/tree_document.hpp"

#include <json.hpp>

#include "foon/documents.hpp"

namespace foon::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json spec_to_json(const ObjectSpec& spec) {
    ordered_json out;
    out["label"] = spec.label;
    out["states"] = spec.states;
    out["ingredients"] = spec.ingredients;
    out["container"] = spec.container ? ordered_json(*spec.container) : ordered_json(nullptr);
    return out;
}

ordered_json tag_to_json(const StateTag& tag) {
    ordered_json out;
    out["name"] = tag.name;
    if (tag.ingredients) out["ingredients"] = *tag.ingredients;
    if (tag.container) out["container"] = *tag.container;
    return out;
}

ordered_json node_to_json(const ObjectNode& node) {
    ordered_json out;
    out["label"] = node.label;
    ordered_json states = ordered_json::array();
    for (const auto& tag : node.states) states.push_back(tag_to_json(tag));
    out["states"] = std::move(states);
    return out;
}

ordered_json unit_to_json(const FunctionalUnit& unit) {
    ordered_json out;
    ordered_json inputs = ordered_json::array();
    for (const auto& node : unit.inputs) inputs.push_back(node_to_json(node));
    out["inputs"] = std::move(inputs);
    out["motion"] = unit.motion.label;
    ordered_json outputs = ordered_json::array();
    for (const auto& node : unit.outputs) outputs.push_back(node_to_json(node));
    out["outputs"] = std::move(outputs);
    return out;
}

std::string require_string(const ordered_json& value, const char* what) {
    if (!value.is_string()) throw ParseError(std::string("task tree document: ") + what);
    return value.get<std::string>();
}

ObjectNode node_from_json(const ordered_json& value) {
    if (!value.is_object() || !value.contains("label"))
        throw ParseError("task tree document: node entry must be an object with a \"label\"");
    std::vector<StateTag> tags;
    if (value.contains("states")) {
        if (!value["states"].is_array())
            throw ParseError("task tree document: node \"states\" must be an array");
        for (const auto& entry : value["states"]) {
            if (!entry.is_object() || !entry.contains("name"))
                throw ParseError("task tree document: state entry must have a \"name\"");
            auto name = require_string(entry["name"], "state \"name\" must be a string");
            bool has_ingredients = entry.contains("ingredients") && !entry["ingredients"].is_null();
            bool has_container = entry.contains("container") && !entry["container"].is_null();
            if (has_ingredients && has_container)
                throw ParseError(
                    "task tree document: state has both an ingredient set and a container");
            try {
                if (has_ingredients) {
                    tags.push_back(StateTag::with_ingredients(
                        name, entry["ingredients"].get<std::vector<std::string>>()));
                } else if (has_container) {
                    tags.push_back(StateTag::with_container(
                        name, require_string(entry["container"], "container must be a string")));
                } else {
                    tags.push_back(StateTag::plain(name));
                }
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("task tree document: ") + e.what());
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("task tree document: ") + e.what());
            }
        }
    }
    try {
        return make_node(require_string(value["label"], "node \"label\" must be a string"),
                         std::move(tags));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("task tree document: ") + e.what());
    }
}

ObjectSpec spec_from_json(const ordered_json& value) {
    if (!value.is_object() || !value.contains("label"))
        throw ParseError("task tree document: \"goal\" must be an object with a \"label\"");
    std::vector<std::string> states;
    std::vector<std::string> ingredients;
    std::optional<std::string> container;
    try {
        if (value.contains("states")) states = value["states"].get<std::vector<std::string>>();
        if (value.contains("ingredients"))
            ingredients = value["ingredients"].get<std::vector<std::string>>();
        if (value.contains("container") && !value["container"].is_null())
            container = require_string(value["container"], "goal container must be a string");
        return make_spec(require_string(value["label"], "goal \"label\" must be a string"),
                         std::move(states), std::move(ingredients), std::move(container));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("task tree document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("task tree document: ") + e.what());
    }
}

}  // namespace

std::string export_tree_document(const retrieval::TaskTree& tree) {
    ordered_json doc;
    doc["goal"] = spec_to_json(tree.goal);
    doc["algorithm"] = std::string(retrieval::to_string(tree.algorithm));
    if (tree.depth_reached) doc["depth_reached"] = *tree.depth_reached;
    ordered_json units = ordered_json::array();
    for (const auto& unit : tree.units) units.push_back(unit_to_json(unit));
    doc["units"] = std::move(units);

    auto stats = retrieval::tree_stats(tree);
    ordered_json stats_json;
    stats_json["goal"] = stats.goal_label;
    stats_json["algorithm"] = std::string(retrieval::to_string(stats.algorithm));
    stats_json["output_lines"] = stats.output_lines;
    stats_json["unit_count"] = stats.unit_count;
    stats_json["motion_count"] = stats.motion_count;
    stats_json["distinct_object_count"] = stats.distinct_object_count;
    doc["stats"] = std::move(stats_json);

    return doc.dump(2) + "\n";
}

retrieval::TaskTree parse_tree_document(std::string_view json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("task tree document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("task tree document: expected a JSON object");
    if (!doc.contains("goal") || !doc.contains("algorithm") || !doc.contains("units"))
        throw ParseError("task tree document: missing \"goal\", \"algorithm\" or \"units\"");

    retrieval::TaskTree tree;
    tree.goal = spec_from_json(doc["goal"]);
    auto algorithm = retrieval::algorithm_from_string(
        require_string(doc["algorithm"], "\"algorithm\" must be a string"));
    if (!algorithm) throw ParseError("task tree document: unknown algorithm");
    tree.algorithm = *algorithm;
    if (doc.contains("depth_reached")) {
        if (!doc["depth_reached"].is_number_unsigned())
            throw ParseError("task tree document: \"depth_reached\" must be a non-negative integer");
        tree.depth_reached = doc["depth_reached"].get<std::size_t>();
    }
    if (!doc["units"].is_array())
        throw ParseError("task tree document: \"units\" must be an array");
    for (const auto& entry : doc["units"]) {
        if (!entry.is_object() || !entry.contains("inputs") || !entry.contains("motion") ||
            !entry.contains("outputs"))
            throw ParseError("task tree document: unit entry must have inputs, motion, outputs");
        FunctionalUnit unit;
        if (!entry["inputs"].is_array() || !entry["outputs"].is_array())
            throw ParseError("task tree document: unit inputs/outputs must be arrays");
        for (const auto& node : entry["inputs"]) unit.inputs.push_back(node_from_json(node));
        unit.motion.label =
            canonical_motion(require_string(entry["motion"], "unit \"motion\" must be a string"));
        if (unit.motion.label.empty())
            throw ParseError("task tree document: unit motion label is empty");
        for (const auto& node : entry["outputs"]) unit.outputs.push_back(node_from_json(node));
        tree.units.push_back(std::move(unit));
    }
    return tree;
}

}  // namespace foon::io
