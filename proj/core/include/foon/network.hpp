#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "foon/core.hpp"

namespace foon {

struct AddResult {
    std::size_t index;
    bool inserted;  // false when an equal unit was already stored
};

/// The universal FOON: deduplicated functional units in first-seen order,
/// plus an index from object-node identity to the units producing that node.
///
/// Construction is single-writer; once built the network is immutable and
/// safe for any number of concurrent readers.
class Network {
public:
    /// Appends the unit unless an equal one is already stored. Returns the
    /// stored unit's index either way. Throws std::invalid_argument if the
    /// unit has no inputs, no outputs, or an empty motion label.
    AddResult add_unit(FunctionalUnit unit);

    const std::vector<FunctionalUnit>& units() const { return units_; }
    const FunctionalUnit& unit(std::size_t index) const { return units_.at(index); }
    std::size_t size() const { return units_.size(); }
    bool empty() const { return units_.empty(); }

    /// object key -> indices of units whose outputs contain that node,
    /// ascending.
    const std::unordered_map<std::string, std::vector<std::size_t>>& producer_index() const {
        return producer_index_;
    }

    /// Indices (ascending) of every unit with an output node matching the
    /// spec.
    std::vector<std::size_t> producers_of(const ObjectSpec& spec) const;

private:
    std::vector<FunctionalUnit> units_;
    std::unordered_map<std::string, std::vector<std::size_t>> producer_index_;
    std::unordered_map<std::string, std::size_t> unit_lookup_;  // unit key -> index
};

/// Combines networks into one, first-seen order preserved: networks in
/// argument order, units in their stored order, duplicates dropped.
Network merge(std::span<const Network> networks);

}  // namespace foon
