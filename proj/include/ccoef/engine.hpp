#pragma once

#include <cstddef>

#include "ccoef/configuration.hpp"
#include "ccoef/rule_table.hpp"

namespace ccoef {

/// Synchronous update of every cell. Throws std::domain_error when the row
/// and the rule disagree on the colour count.
Configuration step(const Configuration& config, const RuleTable& rule);

/// Runs `steps` transitions (steps >= 1) and returns all steps + 1 rows.
Evolution evolve(const RuleTable& rule, const Configuration& init, std::size_t steps);

/// True when every row after the first is the successor of the one above it.
bool replays(const Evolution& evolution, const RuleTable& rule);

/// Width that keeps the light cone of a `pattern_width`-cell seed from wrapping
/// within `steps` transitions.
constexpr std::size_t light_cone_width(std::size_t pattern_width, int radius, std::size_t steps) {
  return pattern_width + 2 * static_cast<std::size_t>(radius) * steps;
}

}  // namespace ccoef
