#include "foon/retrieval.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "foon/text_format.hpp"

namespace foon::retrieval {

namespace {

// Identity key for a goal spec demand. The prefix byte keeps spec keys
// disjoint from object keys (canonical labels never start with a control
// byte).
std::string spec_key(const ObjectSpec& spec) {
    std::string key{'\x1d'};
    key += spec.label;
    for (const auto& s : spec.states) {
        key.push_back('\x02');
        key += s;
    }
    for (const auto& i : spec.ingredients) {
        key.push_back('\x03');
        key += i;
    }
    if (spec.container) {
        key.push_back('\x04');
        key += *spec.container;
    }
    return key;
}

bool subset_of(const std::vector<std::string>& wanted, const std::vector<std::string>& have) {
    return std::includes(have.begin(), have.end(), wanted.begin(), wanted.end());
}

// Chronological-backtracking AND-OR resolution shared by IDS and greedy
// best-first. A demand (the goal spec, or a unit input) is closed by the
// kitchen, by an already-resolved item, or by expanding a producing unit,
// whose inputs become demands one level deeper.
//
// Continuation-passing keeps every open choice point on the stack: when a
// later sibling or a depth-bound check fails, control returns into the most
// recent candidate loop, which tries its next alternative. With the cycle
// guards below, a chain never expands the same unit or the same item twice,
// so expansion per chain is bounded by the unit count and the search always
// terminates.
struct Engine {
    Engine(const Network& network, const io::Kitchen& kitchen, Algorithm algorithm,
           const io::MotionProfile* profile, std::optional<std::size_t> depth_bound,
           RetrievalTrace* trace)
        : network(network),
          kitchen(kitchen),
          algorithm(algorithm),
          profile(profile),
          depth_bound(depth_bound),
          trace(trace) {}

    const Network& network;
    const io::Kitchen& kitchen;
    Algorithm algorithm;
    const io::MotionProfile* profile;        // gbfs_h1
    std::optional<std::size_t> depth_bound;  // IDS: current bound D
    RetrievalTrace* trace;                   // gbfs only

    struct MemoEntry {
        std::size_t unit;
        std::size_t height;  // unit hops to the deepest kitchen leaf below
    };
    std::unordered_map<std::string, MemoEntry> memo;  // item key -> resolution
    std::vector<std::size_t> committed;               // first-commit order
    std::unordered_set<std::size_t> committed_set;
    std::unordered_set<std::string> chain_items;  // demands open on the active chain
    std::unordered_set<std::size_t> chain_units;  // units expanded on the active chain

    // Undo log; marks taken before a candidate attempt roll the whole
    // attempt back, including commits made inside continuations.
    enum class EventKind { memo_add, commit_unit, trace_add };
    struct Event {
        EventKind kind;
        std::string key;
    };
    std::vector<Event> log;

    using Cont = std::function<bool()>;

    struct Candidate {
        std::size_t unit;
        double score;
    };

    void rollback(std::size_t mark) {
        while (log.size() > mark) {
            const auto& event = log.back();
            switch (event.kind) {
                case EventKind::memo_add:
                    memo.erase(event.key);
                    break;
                case EventKind::commit_unit:
                    committed_set.erase(committed.back());
                    committed.pop_back();
                    break;
                case EventKind::trace_add:
                    trace->pop_back();
                    break;
            }
            log.pop_back();
        }
    }

    // Producers of the item, minus guard-disqualified units, in the order
    // the algorithm tries them: ascending index for IDS, best heuristic
    // first (ties by index) for greedy.
    std::vector<Candidate> gather_candidates(const ObjectSpec& spec) {
        std::vector<Candidate> result;
        for (auto index : network.producers_of(spec)) {
            if (chain_units.contains(index)) continue;
            const auto& unit = network.unit(index);
            bool reintroduces_open_item =
                std::any_of(unit.outputs.begin(), unit.outputs.end(), [&](const ObjectNode& out) {
                    return chain_items.contains(object_key(out));
                });
            if (reintroduces_open_item) continue;
            double score = 0.0;
            if (algorithm == Algorithm::gbfs_h1) score = h1_score(unit, *profile);
            if (algorithm == Algorithm::gbfs_h2) score = static_cast<double>(h2_score(unit));
            result.push_back({index, score});
        }
        if (algorithm == Algorithm::gbfs_h1) {
            std::stable_sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
                return a.score > b.score;  // stable: equal scores keep ascending index
            });
        } else if (algorithm == Algorithm::gbfs_h2) {
            std::stable_sort(result.begin(), result.end(),
                             [](const auto& a, const auto& b) { return a.score < b.score; });
        }
        return result;
    }

    std::size_t resolved_height(const FunctionalUnit& unit) const {
        std::size_t deepest = 0;
        for (const auto& input : unit.inputs) {
            if (available(input, kitchen)) continue;
            deepest = std::max(deepest, memo.at(object_key(input)).height);
        }
        return deepest + 1;
    }

    void commit(const std::string& key, const Candidate& chosen,
                const std::vector<Candidate>& siblings, const FunctionalUnit& unit) {
        memo.emplace(key, MemoEntry{chosen.unit, resolved_height(unit)});
        log.push_back({EventKind::memo_add, key});
        if (committed_set.insert(chosen.unit).second) {
            committed.push_back(chosen.unit);
            log.push_back({EventKind::commit_unit, {}});
        }
        if (trace != nullptr && algorithm != Algorithm::ids) {
            Decision decision;
            decision.item_key = key;
            for (const auto& candidate : siblings)
                decision.scored_candidates.emplace_back(candidate.unit, candidate.score);
            decision.chosen_unit = chosen.unit;
            trace->push_back(std::move(decision));
            log.push_back({EventKind::trace_add, {}});
        }
    }

    bool solve_demand(const ObjectSpec& spec, const std::string& key, bool is_available,
                      std::size_t depth, const Cont& cont) {
        if (is_available) return cont();
        if (auto it = memo.find(key); it != memo.end()) {
            // Reuse keeps one producer per item; under a depth bound the
            // reused subtree must still fit below this demand.
            if (depth_bound && depth + it->second.height > *depth_bound) return false;
            return cont();
        }
        if (chain_items.contains(key)) return false;
        if (depth_bound && depth >= *depth_bound) return false;

        auto candidates = gather_candidates(spec);
        for (const auto& candidate : candidates) {
            const auto& unit = network.unit(candidate.unit);
            std::size_t mark = log.size();
            chain_items.insert(key);
            chain_units.insert(candidate.unit);
            bool solved = solve_inputs(unit, 0, depth + 1, [&] {
                chain_items.erase(key);
                chain_units.erase(candidate.unit);
                commit(key, candidate, candidates, unit);
                bool rest = cont();
                if (!rest) {
                    // Continuation failed; reopen the chain entries while the
                    // remaining alternatives below this demand are retried.
                    chain_items.insert(key);
                    chain_units.insert(candidate.unit);
                }
                return rest;
            });
            chain_items.erase(key);
            chain_units.erase(candidate.unit);
            if (solved) return true;
            rollback(mark);
        }
        return false;
    }

    bool solve_inputs(const FunctionalUnit& unit, std::size_t next, std::size_t depth,
                      const Cont& cont) {
        if (next == unit.inputs.size()) return cont();
        const ObjectNode& node = unit.inputs[next];
        return solve_demand(spec_of(node), object_key(node), available(node, kitchen), depth,
                            [&] { return solve_inputs(unit, next + 1, depth, cont); });
    }

    bool solve_goal(const ObjectSpec& goal) {
        return solve_demand(goal, spec_key(goal), false, 0, [] { return true; });
    }
};

TaskTree assemble_tree(const Network& network, const io::Kitchen& kitchen, const ObjectSpec& goal,
                       Algorithm algorithm, const Engine& engine,
                       std::optional<std::size_t> depth_reached) {
    Resolution resolution;
    resolution.units = engine.committed;
    for (const auto& [key, entry] : engine.memo) resolution.producer_by_item[key] = entry.unit;

    TaskTree tree;
    tree.goal = goal;
    tree.algorithm = algorithm;
    tree.depth_reached = depth_reached;
    for (auto index : order_units(network, resolution, kitchen))
        tree.units.push_back(network.unit(index));
    return tree;
}

// Returns the empty tree when the goal is already in the kitchen; throws
// goal_not_found when nothing in the network can produce it.
std::optional<TaskTree> precheck(const Network& network, const ObjectSpec& goal,
                                 const io::Kitchen& kitchen, Algorithm algorithm) {
    if (available(goal, kitchen)) {
        TaskTree tree;
        tree.goal = goal;
        tree.algorithm = algorithm;
        if (algorithm == Algorithm::ids) tree.depth_reached = 0;
        return tree;
    }
    if (network.producers_of(goal).empty()) {
        throw RetrievalError(RetrievalErrorKind::goal_not_found, "goal not found: " + goal.label);
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::ids: return "ids";
        case Algorithm::gbfs_h1: return "gbfs-h1";
        case Algorithm::gbfs_h2: return "gbfs-h2";
    }
    return "unknown";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
    if (name == "ids") return Algorithm::ids;
    if (name == "gbfs-h1") return Algorithm::gbfs_h1;
    if (name == "gbfs-h2") return Algorithm::gbfs_h2;
    return std::nullopt;
}

bool available(const ObjectNode& node, const io::Kitchen& kitchen) {
    if (kitchen.has_utensil(node.label)) return true;
    for (const auto& item : kitchen.items) {
        if (item.label != node.label) continue;
        bool covered = true;
        for (const auto& tag : node.states) {
            if (tag.ingredients) {
                covered = subset_of(*tag.ingredients, item.ingredients);
            } else if (tag.container) {
                covered = item.container && *item.container == *tag.container;
            } else {
                covered = std::binary_search(item.states.begin(), item.states.end(), tag.name);
            }
            if (!covered) break;
        }
        if (covered) return true;
    }
    return false;
}

bool available(const ObjectSpec& spec, const io::Kitchen& kitchen) {
    if (kitchen.has_utensil(spec.label)) return true;
    for (const auto& item : kitchen.items) {
        if (item.label != spec.label) continue;
        if (!subset_of(spec.states, item.states)) continue;
        if (!subset_of(spec.ingredients, item.ingredients)) continue;
        if (spec.container && (!item.container || *item.container != *spec.container)) continue;
        return true;
    }
    return false;
}

std::vector<std::size_t> candidates(const Network& network, const ObjectSpec& item) {
    return network.producers_of(item);
}

std::vector<std::size_t> candidates(const Network& network, const ObjectNode& item) {
    return network.producers_of(spec_of(item));
}

double h1_score(const FunctionalUnit& unit, const io::MotionProfile& profile) {
    return profile.lookup(unit.motion.label);
}

std::size_t h2_score(const FunctionalUnit& unit) { return unit.inputs.size(); }

std::size_t select_candidate(std::span<const std::size_t> candidate_indices,
                             std::span<const double> scores, Objective objective) {
    if (candidate_indices.size() != scores.size())
        throw std::invalid_argument("select_candidate: one score per candidate required");
    if (candidate_indices.empty())
        throw RetrievalError(RetrievalErrorKind::no_producer, "no producer for item");
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidate_indices.size(); ++i) {
        bool better = objective == Objective::maximize ? scores[i] > scores[best]
                                                       : scores[i] < scores[best];
        bool tie_wins = scores[i] == scores[best] && candidate_indices[i] < candidate_indices[best];
        if (better || tie_wins) best = i;
    }
    return candidate_indices[best];
}

std::vector<std::size_t> order_units(const Network& network, const Resolution& resolution,
                                     const io::Kitchen& kitchen) {
    std::unordered_map<std::size_t, std::vector<std::size_t>> dependents;
    std::unordered_map<std::size_t, std::size_t> indegree;
    for (auto unit_index : resolution.units) indegree.emplace(unit_index, 0);

    for (auto unit_index : resolution.units) {
        for (const auto& input : network.unit(unit_index).inputs) {
            if (available(input, kitchen)) continue;
            auto it = resolution.producer_by_item.find(object_key(input));
            if (it == resolution.producer_by_item.end()) continue;
            dependents[it->second].push_back(unit_index);
            ++indegree[unit_index];
        }
    }

    std::set<std::size_t> ready;
    for (const auto& [unit_index, degree] : indegree) {
        if (degree == 0) ready.insert(unit_index);
    }

    std::vector<std::size_t> order;
    order.reserve(resolution.units.size());
    while (!ready.empty()) {
        std::size_t unit_index = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(unit_index);
        for (auto dependent : dependents[unit_index]) {
            if (--indegree[dependent] == 0) ready.insert(dependent);
        }
    }
    if (order.size() != resolution.units.size())
        throw std::logic_error("order_units: dependency cycle in committed resolution");
    return order;
}

TaskTree retrieve_gbfs(const Network& network, const ObjectSpec& goal, const io::Kitchen& kitchen,
                       const RetrievalConfig& config, RetrievalTrace* trace) {
    if (config.algorithm != Algorithm::gbfs_h1 && config.algorithm != Algorithm::gbfs_h2)
        throw std::invalid_argument("retrieve_gbfs: config.algorithm must be gbfs-h1 or gbfs-h2");
    if (auto tree = precheck(network, goal, kitchen, config.algorithm)) return *tree;

    Engine engine{network, kitchen, config.algorithm, &config.motion_profile, std::nullopt, trace};
    if (!engine.solve_goal(goal)) {
        throw RetrievalError(RetrievalErrorKind::unreachable_goal,
                             "unreachable goal: " + goal.label);
    }
    return assemble_tree(network, kitchen, goal, config.algorithm, engine, std::nullopt);
}

TaskTree retrieve_ids(const Network& network, const ObjectSpec& goal, const io::Kitchen& kitchen,
                      const RetrievalConfig& config) {
    if (config.algorithm != Algorithm::ids)
        throw std::invalid_argument("retrieve_ids: config.algorithm must be ids");
    if (config.max_depth && *config.max_depth == 0)
        throw std::invalid_argument("retrieve_ids: explicit max_depth must be at least 1");
    if (auto tree = precheck(network, goal, kitchen, config.algorithm)) return *tree;

    std::size_t max_depth = config.max_depth.value_or(network.size());
    for (std::size_t bound = 0; bound <= max_depth; ++bound) {
        Engine engine{network, kitchen, Algorithm::ids, nullptr, bound, nullptr};
        if (engine.solve_goal(goal)) {
            return assemble_tree(network, kitchen, goal, Algorithm::ids, engine, bound);
        }
    }
    throw RetrievalError(RetrievalErrorKind::unreachable_goal, "unreachable goal: " + goal.label);
}

TaskTree retrieve(const Network& network, const ObjectSpec& goal, const io::Kitchen& kitchen,
                  const RetrievalConfig& config, RetrievalTrace* trace) {
    if (config.algorithm == Algorithm::ids) return retrieve_ids(network, goal, kitchen, config);
    return retrieve_gbfs(network, goal, kitchen, config, trace);
}

RetrievalStats tree_stats(const TaskTree& tree) {
    RetrievalStats stats;
    stats.goal_label = tree.goal.label;
    stats.algorithm = tree.algorithm;
    auto text = io::serialize_foon(tree.units);
    stats.output_lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    stats.unit_count = tree.units.size();
    stats.motion_count = tree.units.size();
    std::unordered_set<std::string> objects;
    for (const auto& unit : tree.units) {
        for (const auto& node : unit.inputs) objects.insert(object_key(node));
        for (const auto& node : unit.outputs) objects.insert(object_key(node));
    }
    stats.distinct_object_count = objects.size();
    return stats;
}

}  // namespace foon::retrieval
