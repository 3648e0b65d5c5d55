#pragma once

// Deterministic random generators for property tests. All draw from a caller
// provided mt19937 so failures reproduce from the seed.

#include <random>
#include <string>
#include <vector>

#include "foon/core.hpp"
#include "foon/documents.hpp"
#include "foon/network.hpp"

#include "support/fixtures.hpp"

namespace testgen {

struct Scenario {
    foon::Network network;
    foon::io::Kitchen kitchen;
    foon::ObjectSpec goal;
};

inline std::size_t pick(std::mt19937& rng, std::size_t upper_exclusive) {
    return std::uniform_int_distribution<std::size_t>(0, upper_exclusive - 1)(rng);
}

inline const std::vector<std::string>& motion_pool() {
    static const std::vector<std::string> motions = {"cut", "pour", "mix", "boil",
                                                     "pick-and-place"};
    return motions;
}

// A network where every demanded item has at most one producer: each unit
// outputs fresh labels never reused, so all three algorithms face singleton
// candidate lists everywhere.
inline Scenario single_producer(std::mt19937& rng, std::size_t max_units = 10) {
    Scenario scenario;
    std::size_t base_count = 1 + pick(rng, 3);
    std::vector<foon::ObjectSpec> items;
    std::vector<foon::ObjectNode> pool;
    for (std::size_t b = 0; b < base_count; ++b) {
        std::string label = "base" + std::to_string(b);
        items.push_back(foon::make_spec(label, {"raw"}));
        pool.push_back(foon::make_node(label, {foon::StateTag::plain("raw")}));
    }
    pool.push_back(foon::make_node("tool"));
    scenario.kitchen = fixtures::make_kitchen(std::move(items), {"tool"});

    std::size_t unit_count = 1 + pick(rng, max_units);
    foon::ObjectNode last_output = pool.front();
    for (std::size_t i = 0; i < unit_count; ++i) {
        foon::FunctionalUnit unit;
        std::size_t input_count = 1 + pick(rng, 2);
        for (std::size_t k = 0; k < input_count; ++k) unit.inputs.push_back(pool[pick(rng, pool.size())]);
        unit.motion = {motion_pool()[pick(rng, motion_pool().size())]};
        std::size_t output_count = 1 + pick(rng, 2);
        for (std::size_t k = 0; k < output_count; ++k) {
            auto node = foon::make_node("item" + std::to_string(i) + "x" + std::to_string(k),
                                        {foon::StateTag::plain("made")});
            unit.outputs.push_back(node);
        }
        last_output = unit.outputs.front();
        for (const auto& out : unit.outputs) pool.push_back(out);
        scenario.network.add_unit(std::move(unit));
    }
    scenario.goal = foon::spec_of(last_output);
    return scenario;
}

// Small tangled networks grown bottom-up: units mostly consume nodes that
// are already available or producible (so chains get deep), sometimes
// re-produce an existing node (so items get alternative producers), and
// sometimes demand junk (so branches dead-end). Goals may still be
// unreachable; pair with the enumeration oracle.
inline Scenario multi_producer(std::mt19937& rng, std::size_t max_units = 8) {
    static const std::vector<std::string> labels = {"a", "b", "c", "d", "e", "f"};
    static const std::vector<std::string> states = {"cooked", "mixed", "hot"};

    auto random_node = [&]() {
        std::vector<foon::StateTag> tags;
        std::size_t state_count = pick(rng, 3);  // 0..2
        std::vector<std::string> chosen;
        for (std::size_t s = 0; s < state_count; ++s) {
            const auto& name = states[pick(rng, states.size())];
            if (std::find(chosen.begin(), chosen.end(), name) == chosen.end()) {
                chosen.push_back(name);
                tags.push_back(foon::StateTag::plain(name));
            }
        }
        return foon::make_node(labels[pick(rng, labels.size())], std::move(tags));
    };

    Scenario scenario;
    std::vector<foon::ObjectNode> pool;
    std::size_t item_count = 1 + pick(rng, 2);
    std::vector<foon::ObjectSpec> items;
    for (std::size_t i = 0; i < item_count; ++i) {
        const auto& label = labels[pick(rng, labels.size())];
        items.push_back(foon::make_spec(label, {"raw"}));
        pool.push_back(foon::make_node(label, {foon::StateTag::plain("raw")}));
    }
    scenario.kitchen = fixtures::make_kitchen(std::move(items), {});

    std::vector<foon::ObjectNode> produced;
    std::size_t unit_count = 3 + pick(rng, max_units - 2);  // 3..max_units
    for (std::size_t i = 0; i < unit_count; ++i) {
        foon::FunctionalUnit unit;
        std::size_t input_count = 1 + pick(rng, 2);
        for (std::size_t k = 0; k < input_count; ++k) {
            std::size_t roll = pick(rng, 10);
            if (roll < 5) {
                // recent outputs first, so chains get deep
                std::size_t back = pick(rng, std::min<std::size_t>(pool.size(), 3));
                unit.inputs.push_back(pool[pool.size() - 1 - back]);
            } else if (roll < 8) {
                unit.inputs.push_back(pool[pick(rng, pool.size())]);
            } else {
                unit.inputs.push_back(random_node());  // may dead-end
            }
        }
        unit.motion = {motion_pool()[pick(rng, motion_pool().size())]};
        std::size_t output_count = 1 + pick(rng, 2);
        for (std::size_t k = 0; k < output_count; ++k) {
            if (!produced.empty() && pick(rng, 10) < 4) {
                // alternative producer of an already-produced node
                unit.outputs.push_back(produced[pick(rng, produced.size())]);
            } else {
                unit.outputs.push_back(random_node());
            }
        }
        for (const auto& out : unit.outputs) {
            pool.push_back(out);
            produced.push_back(out);
        }
        scenario.network.add_unit(std::move(unit));
    }

    if (!produced.empty() && pick(rng, 10) < 8) {
        // bias toward late outputs so chains have some depth
        std::size_t back = pick(rng, std::min<std::size_t>(produced.size(), 4));
        scenario.goal = foon::spec_of(produced[produced.size() - 1 - back]);
    } else {
        std::vector<std::string> goal_states;
        std::size_t goal_state_count = pick(rng, 3);
        for (std::size_t s = 0; s < goal_state_count; ++s)
            goal_states.push_back(states[pick(rng, states.size())]);
        scenario.goal = foon::make_spec(labels[pick(rng, labels.size())], std::move(goal_states));
    }
    return scenario;
}

// Arbitrary standalone units for serializer round-trips.
inline foon::FunctionalUnit random_unit(std::mt19937& rng) {
    static const std::vector<std::string> labels = {"red onion", "bowl", "egg",
                                                    "cutting board", "salt"};
    static const std::vector<std::string> states = {"whole", "diced", "empty", "clean"};

    auto random_node = [&]() {
        std::vector<foon::StateTag> tags;
        std::size_t tag_count = pick(rng, 4);  // 0..3
        for (std::size_t t = 0; t < tag_count; ++t) {
            switch (pick(rng, 3)) {
                case 0:
                    tags.push_back(foon::StateTag::plain(states[pick(rng, states.size())]));
                    break;
                case 1: {
                    std::vector<std::string> ingredients;
                    std::size_t n = 1 + pick(rng, 3);
                    for (std::size_t k = 0; k < n; ++k)
                        ingredients.push_back(labels[pick(rng, labels.size())]);
                    tags.push_back(foon::StateTag::with_ingredients("contains", ingredients));
                    break;
                }
                default:
                    tags.push_back(
                        foon::StateTag::with_container("in", labels[pick(rng, labels.size())]));
                    break;
            }
        }
        return foon::make_node(labels[pick(rng, labels.size())], std::move(tags));
    };

    foon::FunctionalUnit unit;
    std::size_t input_count = 1 + pick(rng, 3);
    for (std::size_t k = 0; k < input_count; ++k) unit.inputs.push_back(random_node());
    unit.motion = {motion_pool()[pick(rng, motion_pool().size())]};
    std::size_t output_count = 1 + pick(rng, 2);
    for (std::size_t k = 0; k < output_count; ++k) unit.outputs.push_back(random_node());
    return unit;
}

}  // namespace testgen
