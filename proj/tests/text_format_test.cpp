#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "foon/text_format.hpp"

#include "support/fixtures.hpp"
#include "support/random_networks.hpp"

using namespace foon;
using io::parse_foon;
using io::serialize_foon;

namespace {

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
    std::size_t count = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) nl = text.size();
        std::string_view line(text.data() + start, nl - start);
        if (line.substr(0, prefix.size()) == prefix) ++count;
        start = nl + 1;
    }
    return count;
}

std::size_t error_count(const io::ParseResult& result) {
    return static_cast<std::size_t>(
        std::count_if(result.diagnostics.begin(), result.diagnostics.end(),
                      [](const io::ParseDiagnostic& d) { return d.severity == io::Severity::error; }));
}

}  // namespace

TEST_CASE("the cut block parses into the expected unit") {
    auto result = parse_foon(fixtures::kCutBlock);
    CHECK(result.diagnostics.empty());
    REQUIRE(result.units.size() == 1);
    const auto& unit = result.units.front();
    CHECK(units_equal(unit, fixtures::cut_unit()));
    REQUIRE(unit.inputs.size() == 3);
    CHECK(unit.inputs[0].label == "cutting board");
    CHECK(unit.inputs[1].label == "sweet potato");
    CHECK(unit.inputs[2].label == "knife");
    CHECK(unit.motion.label == "cut");
    REQUIRE(unit.outputs.size() == 1);
    CHECK(unit.outputs[0].label == "sweet potato");
}

TEST_CASE("empty input parses to nothing") {
    auto result = parse_foon("");
    CHECK(result.units.empty());
    CHECK(result.diagnostics.empty());
    CHECK(result.ok());
}

TEST_CASE("a block with two motion lines is rejected at the second one") {
    std::string text =
        "//\n"
        "O potato\n"
        "M cut\n"
        "M slice\n"
        "O potato\n"
        "S sliced\n"
        "//\n";
    auto result = parse_foon(text);
    CHECK(result.units.empty());
    REQUIRE(error_count(result) == 1);
    CHECK(result.diagnostics.front().line == 4);
    CHECK(result.diagnostics.front().message == "unit has more than one motion line");
}

TEST_CASE("malformed blocks produce diagnostics and are skipped") {
    SUBCASE("state before any object") {
        auto result = parse_foon("//\nS peeled\nO x\nM cut\nO y\n//\n");
        CHECK(result.units.empty());
        REQUIRE(error_count(result) == 1);
        CHECK(result.diagnostics.front().line == 2);
    }
    SUBCASE("unrecognized prefix") {
        auto result = parse_foon("//\nQ whatever\nO x\nM cut\nO y\n//\n");
        CHECK(result.units.empty());
        CHECK(error_count(result) == 1);
    }
    SUBCASE("unterminated ingredient set") {
        auto result = parse_foon("//\nO bowl\nS contains {egg\nM mix\nO bowl\n//\n");
        CHECK(result.units.empty());
        REQUIRE(error_count(result) == 1);
        CHECK(result.diagnostics.front().message.find("unterminated '{'") != std::string::npos);
    }
    SUBCASE("unterminated container") {
        auto result = parse_foon("//\nO egg\nS in [bowl\nM mix\nO egg\n//\n");
        CHECK(error_count(result) == 1);
    }
    SUBCASE("both decorations on one state") {
        auto result = parse_foon("//\nO egg\nS in {a} [b]\nM mix\nO egg\n//\n");
        REQUIRE(error_count(result) == 1);
        CHECK(result.diagnostics.front().message ==
              "state has both an ingredient set and a container");
    }
    SUBCASE("missing motion") {
        auto result = parse_foon("//\nO x\nO y\n//\n");
        REQUIRE(error_count(result) == 1);
        CHECK(result.diagnostics.front().message == "unit has no motion line");
    }
    SUBCASE("missing inputs") {
        auto result = parse_foon("//\nM cut\nO y\n//\n");
        CHECK(error_count(result) == 1);
    }
    SUBCASE("missing outputs") {
        auto result = parse_foon("//\nO x\nM cut\n//\n");
        CHECK(error_count(result) == 1);
    }
    SUBCASE("id-prefixed dialect is called out") {
        auto result = parse_foon("//\nO123\tknife\t1\nM45\tcut\nO77\tx\n//\n");
        CHECK(result.units.empty());
        CHECK(error_count(result) >= 1);
        CHECK(result.diagnostics.front().message.find("ID-prefixed") != std::string::npos);
    }
    SUBCASE("a bad block does not poison its neighbours") {
        std::string text = std::string("//\nO x\nM\nO y\n//\n") + std::string(fixtures::kCutBlock);
        auto result = parse_foon(text);
        REQUIRE(result.units.size() == 1);
        CHECK(units_equal(result.units.front(), fixtures::cut_unit()));
        CHECK(error_count(result) == 1);
    }
}

TEST_CASE("parser tolerates file hygiene issues") {
    SUBCASE("crlf line endings and tabs") {
        auto result = parse_foon("//\r\nO\tknife\r\nM\tcut\r\nO\tknife\r\nS clean\r\n//\r\n");
        REQUIRE(result.units.size() == 1);
        CHECK(result.units.front().inputs.front().label == "knife");
    }
    SUBCASE("blank lines inside a block") {
        auto result = parse_foon("//\nO knife\n\nM cut\n\nO knife\nS clean\n//\n");
        REQUIRE(result.units.size() == 1);
    }
    SUBCASE("mixed case and double spaces canonicalize") {
        auto result = parse_foon("//\nO Sweet  POTATO\nM cut\nO sweet potato\nS Chopped\n//\n");
        REQUIRE(result.units.size() == 1);
        CHECK(result.units.front().inputs.front().label == "sweet potato");
        CHECK(result.units.front().outputs.front().states.front().name == "chopped");
    }
    SUBCASE("a single delimiter line is shared between units") {
        std::string text =
            "//\nO a\nM cut\nO b\n//\nO b\nM mix\nO c\n//\n";
        auto result = parse_foon(text);
        CHECK(result.units.size() == 2);
        CHECK(count_lines_starting(text, "//") == 3);
    }
    SUBCASE("the trailing delimiter is optional") {
        auto result = parse_foon("//\nO a\nM cut\nO b");
        REQUIRE(result.units.size() == 1);
        CHECK(result.ok());
    }
}

TEST_CASE("serialization is canonical") {
    CHECK(serialize_foon({}) == "");

    std::vector<FunctionalUnit> units = {fixtures::cut_unit()};
    std::string expected =
        "//\n"
        "O cutting board\n"
        "S contains {sweet potato}\n"
        "O sweet potato\n"
        "S peeled\n"
        "S in [cutting board]\n"
        "O knife\n"
        "M cut\n"
        "O sweet potato\n"
        "S chopped\n"
        "S in [cutting board]\n"
        "//\n";
    CHECK(serialize_foon(units) == expected);
    CHECK(std::count(expected.begin(), expected.end(), '\n') == 12);
}

TEST_CASE("round-trip from the hand-authored block is byte-idempotent") {
    auto first = parse_foon(fixtures::kCutBlock);
    REQUIRE(first.ok());
    auto once = serialize_foon(first.units);
    auto second = parse_foon(once);
    REQUIRE(second.ok());
    auto twice = serialize_foon(second.units);
    CHECK(once == twice);
    REQUIRE(second.units.size() == first.units.size());
    CHECK(units_equal(second.units.front(), first.units.front()));
}

TEST_CASE("round-trip preserves random unit lists") {
    std::mt19937 rng(101);
    for (int round = 0; round < 50; ++round) {
        std::vector<FunctionalUnit> units;
        std::size_t count = 1 + testgen::pick(rng, 5);
        for (std::size_t i = 0; i < count; ++i) units.push_back(testgen::random_unit(rng));

        auto text = serialize_foon(units);
        auto result = parse_foon(text);
        REQUIRE(result.ok());
        REQUIRE(result.units.size() == units.size());
        for (std::size_t i = 0; i < units.size(); ++i)
            CHECK(units_equal(result.units[i], units[i]));
        CHECK(serialize_foon(result.units) == text);
    }
}

TEST_CASE("line accounting of serialized output") {
    std::mt19937 rng(202);
    for (int round = 0; round < 30; ++round) {
        std::vector<FunctionalUnit> units;
        std::size_t count = 1 + testgen::pick(rng, 4);
        std::size_t objects = 0;
        std::size_t tags = 0;
        for (std::size_t i = 0; i < count; ++i) {
            auto unit = testgen::random_unit(rng);
            objects += unit.inputs.size() + unit.outputs.size();
            for (const auto& node : unit.inputs) tags += node.states.size();
            for (const auto& node : unit.outputs) tags += node.states.size();
            units.push_back(std::move(unit));
        }
        auto text = serialize_foon(units);
        CHECK(count_lines_starting(text, "//") == count + 1);
        CHECK(count_lines_starting(text, "M ") == count);
        CHECK(count_lines_starting(text, "O ") == objects);
        CHECK(count_lines_starting(text, "S ") == tags);
        CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) ==
              count + 1 + count + objects + tags);
    }
}

TEST_CASE("parser survives junk input") {
    std::mt19937 rng(303);
    for (int round = 0; round < 1000; ++round) {
        std::string text;
        std::size_t length = testgen::pick(rng, 400);
        if (round % 3 == 0) {
            // pure noise
            for (std::size_t i = 0; i < length; ++i)
                text.push_back(static_cast<char>(testgen::pick(rng, 256)));
        } else {
            // mutated fixture text
            text = std::string(fixtures::kCutBlock);
            std::size_t flips = 1 + testgen::pick(rng, 8);
            for (std::size_t f = 0; f < flips && !text.empty(); ++f) {
                text[testgen::pick(rng, text.size())] =
                    static_cast<char>(testgen::pick(rng, 256));
            }
        }
        auto result = parse_foon(text);  // must not throw
        for (const auto& d : result.diagnostics) CHECK(d.line >= 1);
    }
}
