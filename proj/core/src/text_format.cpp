#include "foon/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace foon::io {

namespace {

std::string_view trim_view(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

bool looks_like_id_dialect(std::string_view marker) {
    if (marker.size() < 2) return false;
    if (marker[0] != 'O' && marker[0] != 'S' && marker[0] != 'M') return false;
    return std::all_of(marker.begin() + 1, marker.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::vector<std::string> split_ingredients(std::string_view inside) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= inside.size()) {
        std::size_t comma = inside.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? inside.substr(start) : inside.substr(start, comma - start);
        auto label = canonical_label(piece);
        if (!label.empty()) items.push_back(std::move(label));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

struct Parser {
    std::vector<FunctionalUnit> units;
    std::vector<ParseDiagnostic> diagnostics;

    std::vector<ObjectNode> inputs;
    std::vector<ObjectNode> outputs;
    std::optional<ObjectNode> current_object;
    std::optional<MotionNode> motion;
    bool block_bad = false;
    bool block_has_content = false;
    std::size_t block_first_line = 0;

    void error(std::size_t line, std::string message) {
        diagnostics.push_back({line, Severity::error, std::move(message)});
        block_bad = true;
    }

    void note_content(std::size_t line) {
        if (!block_has_content) block_first_line = line;
        block_has_content = true;
    }

    void flush_object() {
        if (!current_object) return;
        (motion ? outputs : inputs).push_back(std::move(*current_object));
        current_object.reset();
    }

    void finish_block() {
        flush_object();
        if (block_has_content && !block_bad) {
            if (!motion) {
                error(block_first_line, "unit has no motion line");
            } else if (inputs.empty()) {
                error(block_first_line, "unit has no input objects");
            } else if (outputs.empty()) {
                error(block_first_line, "unit has no output objects");
            } else {
                units.push_back({std::move(inputs), std::move(*motion), std::move(outputs)});
            }
        }
        inputs.clear();
        outputs.clear();
        motion.reset();
        block_bad = false;
        block_has_content = false;
        block_first_line = 0;
    }

    void handle_object(std::size_t line, std::string_view payload) {
        flush_object();
        auto label = canonical_label(payload);
        if (label.empty()) {
            error(line, "object label is empty");
            return;
        }
        current_object = ObjectNode{std::move(label), {}};
    }

    void handle_state(std::size_t line, std::string_view payload) {
        if (!current_object) {
            error(line, "state line before any object");
            return;
        }
        std::size_t mark = payload.find_first_of("{[");
        auto name = canonical_label(payload.substr(0, mark));
        if (name.empty()) {
            error(line, "state name is empty");
            return;
        }
        if (name.find_first_of("{}[]") != std::string::npos) {
            error(line, "mismatched '}' or ']' in state: " + name);
            return;
        }
        if (mark == std::string_view::npos) {
            current_object->states.push_back(StateTag::plain(name));
            return;
        }
        char open = payload[mark];
        char close = open == '{' ? '}' : ']';
        std::size_t end = payload.find(close, mark + 1);
        if (end == std::string_view::npos) {
            error(line, std::string("unterminated '") + open + "' in state line");
            return;
        }
        std::string_view inside = payload.substr(mark + 1, end - mark - 1);
        std::string_view rest = trim_view(payload.substr(end + 1));
        if (!rest.empty() && (rest.front() == '{' || rest.front() == '[')) {
            error(line, "state has both an ingredient set and a container");
            return;
        }
        if (!rest.empty()) {
            error(line, std::string("unexpected text after '") + close + "': " + std::string(rest));
            return;
        }
        if (open == '{') {
            current_object->states.push_back(
                StateTag::with_ingredients(name, split_ingredients(inside)));
        } else {
            auto container = canonical_label(inside);
            if (container.empty()) {
                error(line, "container label is empty");
                return;
            }
            current_object->states.push_back(StateTag::with_container(name, container));
        }
    }

    void handle_motion(std::size_t line, std::string_view payload) {
        flush_object();
        if (motion) {
            error(line, "unit has more than one motion line");
            return;
        }
        auto label = canonical_motion(payload);
        if (label.empty()) {
            error(line, "motion label is empty");
            return;
        }
        motion = MotionNode{std::move(label)};
    }

    void handle_line(std::size_t line, std::string_view raw) {
        std::string_view trimmed = trim_view(raw);
        if (trimmed == "//") {
            finish_block();
            return;
        }
        if (trimmed.empty()) return;

        note_content(line);
        std::size_t space = trimmed.find_first_of(" \t");
        std::string_view marker = trimmed.substr(0, space);
        std::string_view payload =
            space == std::string_view::npos ? std::string_view{} : trim_view(trimmed.substr(space));

        if (marker == "O") {
            handle_object(line, payload);
        } else if (marker == "S") {
            handle_state(line, payload);
        } else if (marker == "M") {
            handle_motion(line, payload);
        } else if (marker == "//") {
            error(line, "delimiter line has trailing text");
        } else if (looks_like_id_dialect(marker)) {
            error(line, "ID-prefixed FOON dialect is not supported (marker '" +
                            std::string(marker) + "'); expected plain O/S/M lines");
        } else {
            error(line, "unrecognized line prefix '" + std::string(marker) + "'");
        }
    }
};

}  // namespace

bool ParseResult::ok() const {
    return std::none_of(diagnostics.begin(), diagnostics.end(),
                        [](const ParseDiagnostic& d) { return d.severity == Severity::error; });
}

ParseResult parse_foon(std::string_view text) {
    Parser parser;
    std::size_t line = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t newline = text.find('\n', start);
        std::string_view raw = newline == std::string_view::npos
                                   ? text.substr(start)
                                   : text.substr(start, newline - start);
        if (newline == std::string_view::npos && raw.empty()) break;
        parser.handle_line(line, raw);
        if (newline == std::string_view::npos) break;
        start = newline + 1;
        ++line;
    }
    parser.finish_block();
    return {std::move(parser.units), std::move(parser.diagnostics)};
}

std::string render_state(const StateTag& tag) {
    std::string out = tag.name;
    if (tag.ingredients) {
        out += " {";
        for (std::size_t i = 0; i < tag.ingredients->size(); ++i) {
            if (i > 0) out += ", ";
            out += (*tag.ingredients)[i];
        }
        out += "}";
    }
    if (tag.container) {
        out += " [" + *tag.container + "]";
    }
    return out;
}

std::string serialize_foon(std::span<const FunctionalUnit> units) {
    if (units.empty()) return {};
    std::string out = "//\n";
    auto emit_node = [&out](const ObjectNode& node) {
        out += "O " + node.label + "\n";
        for (const auto& tag : node.states) out += "S " + render_state(tag) + "\n";
    };
    for (const auto& unit : units) {
        for (const auto& node : unit.inputs) emit_node(node);
        out += "M " + unit.motion.label + "\n";
        for (const auto& node : unit.outputs) emit_node(node);
        out += "//\n";
    }
    return out;
}

}  // namespace foon::io
