#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "foon/core.hpp"
#include "foon/text_format.hpp"

namespace foon::io {

/// Unrecoverable document error (malformed JSON, out-of-range value).
/// The message carries the position or the offending key.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Success probability per motion label. Motions absent from the map fall
/// back to default_probability.
struct MotionProfile {
    std::unordered_map<std::string, double> probabilities;
    double default_probability = 0.5;

    double lookup(std::string_view motion_label) const;
};

struct Kitchen {
    std::vector<ObjectSpec> items;
    std::vector<std::string> utensils;  // canonical labels, sorted, deduped

    bool has_utensil(std::string_view canonical) const;
};

struct GoalListResult {
    std::vector<ObjectSpec> specs;
    std::vector<ParseDiagnostic> diagnostics;
};

struct KitchenResult {
    Kitchen kitchen;
    std::vector<ParseDiagnostic> diagnostics;
};

/// Goal documents are JSON arrays of
///   {"label": string, "states": [string], "ingredients": [string],
///    "container": string|null}
/// with everything but "label" optional. Entries without a usable label are
/// rejected with a diagnostic naming the entry; unknown fields produce
/// warnings. Malformed JSON throws ParseError.
GoalListResult parse_goal_list(std::string_view json_text);

/// Kitchen items use the goal document schema; utensils_text is one label
/// per line, "#" comment lines and blanks ignored.
KitchenResult parse_kitchen(std::string_view items_json, std::string_view utensils_text);

/// JSON object of motion -> probability in [0,1]; the reserved key
/// "default" overrides the 0.5 fallback. Out-of-range values throw
/// ParseError naming the motion.
MotionProfile parse_motion_profile(std::string_view json_text);

}  // namespace foon::io
