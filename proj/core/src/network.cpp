#include "foon/network.hpp"

#include <stdexcept>

namespace foon {

AddResult Network::add_unit(FunctionalUnit unit) {
    if (unit.inputs.empty()) throw std::invalid_argument("functional unit has no inputs");
    if (unit.outputs.empty()) throw std::invalid_argument("functional unit has no outputs");
    if (unit.motion.label.empty()) throw std::invalid_argument("functional unit has no motion");

    auto key = unit_key(unit);
    if (auto it = unit_lookup_.find(key); it != unit_lookup_.end()) {
        return {it->second, false};
    }

    std::size_t index = units_.size();
    for (const auto& output : unit.outputs) {
        auto& producers = producer_index_[object_key(output)];
        if (producers.empty() || producers.back() != index) producers.push_back(index);
    }
    unit_lookup_.emplace(std::move(key), index);
    units_.push_back(std::move(unit));
    return {index, true};
}

std::vector<std::size_t> Network::producers_of(const ObjectSpec& spec) const {
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < units_.size(); ++i) {
        for (const auto& output : units_[i].outputs) {
            if (matches_spec(output, spec)) {
                result.push_back(i);
                break;
            }
        }
    }
    return result;
}

Network merge(std::span<const Network> networks) {
    Network merged;
    for (const auto& network : networks) {
        for (const auto& unit : network.units()) merged.add_unit(unit);
    }
    return merged;
}

}  // namespace foon
