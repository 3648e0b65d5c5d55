#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foon/core.hpp"

namespace foon::io {

enum class Severity { error, warning };

struct ParseDiagnostic {
    std::size_t line = 0;  // 1-based line (text formats) or entry index (documents)
    Severity severity = Severity::error;
    std::string message;
};

struct ParseResult {
    std::vector<FunctionalUnit> units;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const;  // true when no error-severity diagnostics are present
};

/// Parses FOON text. Unit blocks are delimited by lines whose trimmed
/// content is "//"; inside a block, "O <label>" starts an object,
/// "S <name> [decoration]" attaches a state to it, and "M <label>" is the
/// motion separating inputs from outputs. Malformed blocks are reported and
/// skipped; the parser accepts arbitrary bytes without throwing.
ParseResult parse_foon(std::string_view text);

/// Canonical byte-deterministic rendering: one shared "//" delimiter line
/// between units plus one at each end, LF line endings, trailing newline.
/// An empty unit list serializes to the empty string.
std::string serialize_foon(std::span<const FunctionalUnit> units);

/// Text form of one state tag as it appears on an "S" line, e.g.
/// "contains {egg, flour}" or "in [bowl]".
std::string render_state(const StateTag& tag);

}  // namespace foon::io
