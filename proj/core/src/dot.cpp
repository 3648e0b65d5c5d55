#include "foon/dot.hpp"

#include <span>
#include <unordered_map>

namespace foon::io {

namespace {

std::string escape_label(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '\\' || c == '"') {
            out.push_back('\\');
            out.push_back(c);
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::string node_label(const ObjectNode& node) {
    std::string text = node.label + "\n[";
    for (std::size_t i = 0; i < node.states.size(); ++i) {
        if (i > 0) text += ", ";
        text += node.states[i].name;
    }
    text += "]";
    return text;
}

std::string units_to_dot(std::span<const FunctionalUnit> units) {
    std::string out = "digraph foon {\n";
    std::unordered_map<std::string, std::string> vertex_by_key;

    auto vertex_for = [&](const ObjectNode& node) {
        auto key = object_key(node);
        auto it = vertex_by_key.find(key);
        if (it != vertex_by_key.end()) return it->second;
        std::string id = "o" + std::to_string(vertex_by_key.size());
        out += "  " + id + " [shape=ellipse, style=filled, fillcolor=green, label=\"" +
               escape_label(node_label(node)) + "\"];\n";
        vertex_by_key.emplace(std::move(key), id);
        return id;
    };

    for (std::size_t i = 0; i < units.size(); ++i) {
        const auto& unit = units[i];
        std::vector<std::string> input_ids;
        std::vector<std::string> output_ids;
        for (const auto& node : unit.inputs) input_ids.push_back(vertex_for(node));
        for (const auto& node : unit.outputs) output_ids.push_back(vertex_for(node));
        std::string motion_id = "m" + std::to_string(i);
        out += "  " + motion_id + " [shape=box, style=filled, fillcolor=red, label=\"" +
               escape_label(unit.motion.label) + "\"];\n";
        for (const auto& id : input_ids) out += "  " + id + " -> " + motion_id + ";\n";
        for (const auto& id : output_ids) out += "  " + motion_id + " -> " + id + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace

std::string export_dot(const Network& network) { return units_to_dot(network.units()); }

std::string export_dot(const retrieval::TaskTree& tree) { return units_to_dot(tree.units); }

}  // namespace foon::io
