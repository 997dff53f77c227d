#pragma once

#include <vector>

#include "hvs/checker.hpp"
#include "hvs/models.hpp"

namespace hvs {

/// Items: right_distributive, left_distributive, associative, negation, unit.
std::vector<ItemCheck> wvs_axiom_items(const ModelSpec& model, std::size_t depth);

CheckReport check_wvs_axioms(const ModelSpec& model, const SampleConfig& cfg);

}  // namespace hvs
