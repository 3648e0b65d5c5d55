#include "foon/documents.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace foon::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

std::optional<std::vector<std::string>> string_array(const json& value) {
    if (!value.is_array()) return std::nullopt;
    std::vector<std::string> items;
    for (const auto& item : value) {
        if (!item.is_string()) return std::nullopt;
        items.push_back(item.get<std::string>());
    }
    return items;
}

struct SpecEntries {
    std::vector<ObjectSpec> specs;
    std::vector<ParseDiagnostic> diagnostics;
};

SpecEntries parse_spec_entries(const json& doc, const std::string& what) {
    SpecEntries out;
    std::size_t entry_no = 0;
    for (const auto& entry : doc) {
        ++entry_no;
        auto tag = what + " " + std::to_string(entry_no);
        if (!entry.is_object()) {
            out.diagnostics.push_back({entry_no, Severity::error, tag + ": expected an object"});
            continue;
        }
        for (const auto& [key, value] : entry.items()) {
            (void)value;
            if (key != "label" && key != "states" && key != "ingredients" && key != "container") {
                out.diagnostics.push_back(
                    {entry_no, Severity::warning, tag + ": unknown field \"" + key + "\" ignored"});
            }
        }
        if (!entry.contains("label") || !entry["label"].is_string() ||
            canonical_label(entry["label"].get<std::string>()).empty()) {
            out.diagnostics.push_back(
                {entry_no, Severity::error, tag + ": missing or empty \"label\""});
            continue;
        }
        std::vector<std::string> states;
        if (entry.contains("states")) {
            auto parsed = string_array(entry["states"]);
            if (!parsed) {
                out.diagnostics.push_back(
                    {entry_no, Severity::error, tag + ": \"states\" must be an array of strings"});
                continue;
            }
            states = std::move(*parsed);
        }
        std::vector<std::string> ingredients;
        if (entry.contains("ingredients")) {
            auto parsed = string_array(entry["ingredients"]);
            if (!parsed) {
                out.diagnostics.push_back(
                    {entry_no, Severity::error,
                     tag + ": \"ingredients\" must be an array of strings"});
                continue;
            }
            ingredients = std::move(*parsed);
        }
        std::optional<std::string> container;
        if (entry.contains("container") && !entry["container"].is_null()) {
            if (!entry["container"].is_string()) {
                out.diagnostics.push_back(
                    {entry_no, Severity::error, tag + ": \"container\" must be a string or null"});
                continue;
            }
            container = entry["container"].get<std::string>();
        }
        out.specs.push_back(make_spec(entry["label"].get<std::string>(), std::move(states),
                                      std::move(ingredients), std::move(container)));
    }
    return out;
}

}  // namespace

double MotionProfile::lookup(std::string_view motion_label) const {
    auto it = probabilities.find(std::string(motion_label));
    return it == probabilities.end() ? default_probability : it->second;
}

bool Kitchen::has_utensil(std::string_view canonical) const {
    return std::binary_search(utensils.begin(), utensils.end(), canonical);
}

GoalListResult parse_goal_list(std::string_view json_text) {
    json doc = parse_json(json_text, "goal document");
    if (!doc.is_array()) throw ParseError("goal document: expected a JSON array");
    auto entries = parse_spec_entries(doc, "entry");
    return {std::move(entries.specs), std::move(entries.diagnostics)};
}

KitchenResult parse_kitchen(std::string_view items_json, std::string_view utensils_text) {
    json doc = parse_json(items_json, "kitchen document");
    if (!doc.is_array()) throw ParseError("kitchen document: expected a JSON array");
    auto entries = parse_spec_entries(doc, "kitchen item");

    KitchenResult result;
    result.kitchen.items = std::move(entries.specs);
    result.diagnostics = std::move(entries.diagnostics);

    std::size_t start = 0;
    while (start <= utensils_text.size()) {
        std::size_t newline = utensils_text.find('\n', start);
        std::string_view raw = newline == std::string_view::npos
                                   ? utensils_text.substr(start)
                                   : utensils_text.substr(start, newline - start);
        std::string label = canonical_label(raw);
        if (!label.empty() && label.front() != '#') result.kitchen.utensils.push_back(label);
        if (newline == std::string_view::npos) break;
        start = newline + 1;
    }
    auto& utensils = result.kitchen.utensils;
    std::sort(utensils.begin(), utensils.end());
    utensils.erase(std::unique(utensils.begin(), utensils.end()), utensils.end());
    return result;
}

MotionProfile parse_motion_profile(std::string_view json_text) {
    json doc = parse_json(json_text, "motion profile");
    if (!doc.is_object()) throw ParseError("motion profile: expected a JSON object");

    MotionProfile profile;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number()) {
            throw ParseError("motion profile: \"" + key + "\" must be a number");
        }
        double p = value.get<double>();
        if (p < 0.0 || p > 1.0) {
            throw ParseError("motion probability out of range for \"" + key +
                             "\": " + value.dump());
        }
        auto label = canonical_motion(key);
        if (label.empty()) throw ParseError("motion profile: empty motion label");
        if (label == "default") {
            profile.default_probability = p;
        } else {
            profile.probabilities[label] = p;
        }
    }
    return profile;
}

}  // namespace foon::io
