#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "foon/core.hpp"
#include "foon/documents.hpp"
#include "foon/network.hpp"

namespace foon::retrieval {

enum class Algorithm { ids, gbfs_h1, gbfs_h2 };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

struct RetrievalConfig {
    Algorithm algorithm = Algorithm::ids;
    /// IDS depth cap; absent means "auto" = unit count of the network.
    std::optional<std::size_t> max_depth;
    /// Consulted by gbfs_h1 only.
    io::MotionProfile motion_profile;
};

/// An execution-ordered resolution of a goal: every non-kitchen-available
/// input of a unit is produced by an earlier unit, and no unit appears
/// twice.
struct TaskTree {
    ObjectSpec goal;
    Algorithm algorithm = Algorithm::ids;
    std::vector<FunctionalUnit> units;
    std::optional<std::size_t> depth_reached;  // IDS only
};

struct RetrievalStats {
    std::string goal_label;
    Algorithm algorithm = Algorithm::ids;
    std::size_t output_lines = 0;  // line count of serialize_foon(units)
    std::size_t unit_count = 0;
    std::size_t motion_count = 0;  // always equals unit_count
    std::size_t distinct_object_count = 0;
};

enum class RetrievalErrorKind {
    goal_not_found,    // nothing in the network matches the goal
    unreachable_goal,  // producers exist but no assignment bottoms out in the kitchen
    no_producer,       // select_candidate called with no candidates
};

class RetrievalError : public std::runtime_error {
public:
    RetrievalError(RetrievalErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    RetrievalErrorKind kind() const { return kind_; }

private:
    RetrievalErrorKind kind_;
};

/// True when the node can be taken straight from the kitchen: its label is a
/// utensil (states ignored), or some kitchen item covers it — same label,
/// the node's plain state names all present on the item, and the node's
/// ingredient/container demands satisfied by the item.
bool available(const ObjectNode& node, const io::Kitchen& kitchen);
bool available(const ObjectSpec& spec, const io::Kitchen& kitchen);

/// Units whose outputs match the item, ascending index.
std::vector<std::size_t> candidates(const Network& network, const ObjectSpec& item);
std::vector<std::size_t> candidates(const Network& network, const ObjectNode& item);

/// Heuristic 1: motion success probability; higher is better.
double h1_score(const FunctionalUnit& unit, const io::MotionProfile& profile);

/// Heuristic 2: input count; lower is better.
std::size_t h2_score(const FunctionalUnit& unit);

enum class Objective { maximize, minimize };

/// Picks the candidate optimizing the objective; ties go to the lowest unit
/// index. Throws RetrievalError(no_producer) on an empty candidate list.
std::size_t select_candidate(std::span<const std::size_t> candidate_indices,
                             std::span<const double> scores, Objective objective);

/// One committed choice during greedy retrieval: the demanded item, every
/// candidate that survived the cycle guard (with its score), and the unit
/// picked.
struct Decision {
    std::string item_key;
    std::vector<std::pair<std::size_t, double>> scored_candidates;
    std::size_t chosen_unit = 0;
};

using RetrievalTrace = std::vector<Decision>;

/// A committed resolution before ordering: unit indices plus the map from
/// demanded-item identity key to the unit that produces it.
struct Resolution {
    std::vector<std::size_t> units;
    std::unordered_map<std::string, std::size_t> producer_by_item;
};

/// Topological execution order over the committed units; units with no
/// mutual dependency are ordered by ascending unit index. Throws
/// std::logic_error if the dependency relation has a cycle.
std::vector<std::size_t> order_units(const Network& network, const Resolution& resolution,
                                     const io::Kitchen& kitchen);

TaskTree retrieve(const Network& network, const ObjectSpec& goal, const io::Kitchen& kitchen,
                  const RetrievalConfig& config, RetrievalTrace* trace = nullptr);

/// config.algorithm must be ids.
TaskTree retrieve_ids(const Network& network, const ObjectSpec& goal, const io::Kitchen& kitchen,
                      const RetrievalConfig& config);

/// config.algorithm must be gbfs_h1 or gbfs_h2.
TaskTree retrieve_gbfs(const Network& network, const ObjectSpec& goal, const io::Kitchen& kitchen,
                       const RetrievalConfig& config, RetrievalTrace* trace = nullptr);

RetrievalStats tree_stats(const TaskTree& tree);

}  // namespace foon::retrieval
