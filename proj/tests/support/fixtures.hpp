#pragma once

// Shared fixtures: the chopped-sweet-potato unit and the three-unit network
// built around it, plus a matching kitchen. Built programmatically so tests
// of the parser and of retrieval stay independent of each other.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "foon/core.hpp"
#include "foon/documents.hpp"
#include "foon/network.hpp"

namespace fixtures {

// The cut block as it appears in hand-authored files, trailing spaces and
// all.
inline constexpr std::string_view kCutBlock =
    "//  \n"
    "O cutting board  \n"
    "S contains {sweet potato}  \n"
    "O sweet potato  \n"
    "S peeled  \n"
    "S in [cutting board]  \n"
    "O knife  \n"
    "M cut  \n"
    "O sweet potato  \n"
    "S chopped  \n"
    "S in [cutting board]  \n"
    "//\n";

inline foon::FunctionalUnit pick_and_place_unit() {
    using foon::StateTag;
    foon::FunctionalUnit unit;
    unit.inputs = {foon::make_node("sweet potato", {StateTag::plain("whole")})};
    unit.motion = {"pick-and-place"};
    unit.outputs = {foon::make_node(
        "sweet potato", {StateTag::plain("whole"), StateTag::with_container("in", "cutting board")})};
    return unit;
}

inline foon::FunctionalUnit peel_unit() {
    using foon::StateTag;
    foon::FunctionalUnit unit;
    unit.inputs = {
        foon::make_node("sweet potato",
                        {StateTag::plain("whole"), StateTag::with_container("in", "cutting board")}),
        foon::make_node("peeler")};
    unit.motion = {"peel"};
    unit.outputs = {foon::make_node(
        "sweet potato", {StateTag::plain("peeled"), StateTag::with_container("in", "cutting board")})};
    return unit;
}

inline foon::FunctionalUnit cut_unit() {
    using foon::StateTag;
    foon::FunctionalUnit unit;
    unit.inputs = {
        foon::make_node("cutting board", {StateTag::with_ingredients("contains", {"sweet potato"})}),
        foon::make_node("sweet potato",
                        {StateTag::plain("peeled"), StateTag::with_container("in", "cutting board")}),
        foon::make_node("knife")};
    unit.motion = {"cut"};
    unit.outputs = {foon::make_node(
        "sweet potato", {StateTag::plain("chopped"), StateTag::with_container("in", "cutting board")})};
    return unit;
}

// pick-and-place, peel, cut — in that insertion order.
inline foon::Network fixture_network() {
    foon::Network network;
    network.add_unit(pick_and_place_unit());
    network.add_unit(peel_unit());
    network.add_unit(cut_unit());
    return network;
}

inline foon::io::Kitchen make_kitchen(std::vector<foon::ObjectSpec> items,
                                      std::vector<std::string> utensils) {
    foon::io::Kitchen kitchen;
    kitchen.items = std::move(items);
    for (auto& u : utensils) u = foon::canonical_label(u);
    std::sort(utensils.begin(), utensils.end());
    utensils.erase(std::unique(utensils.begin(), utensils.end()), utensils.end());
    kitchen.utensils = std::move(utensils);
    return kitchen;
}

inline foon::io::Kitchen fixture_kitchen() {
    return make_kitchen({foon::make_spec("sweet potato", {"whole"})},
                        {"knife", "peeler", "cutting board"});
}

inline foon::ObjectSpec fixture_goal() {
    return foon::make_spec("sweet potato", {"chopped"}, {}, "cutting board");
}

}  // namespace fixtures
