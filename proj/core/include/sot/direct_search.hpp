#pragma once

#include <cstdint>
#include <functional>

#include "sot/node_system.hpp"

namespace sot {

struct PatternSearchOptions {
  double initial_step = 0.1;
  double min_step = 1e-8;
  long budget = 20000;
  /// Random poll directions added to the +-coordinate directions.
  int random_directions = -1;  // -1: n + 1
  std::uint64_t seed = 0;
};

struct PatternSearchResult {
  NodeSystem nodes;
  double value = 0.0;
  long evaluations = 0;
  double final_step = 0.0;
  bool budget_exhausted = false;
};

/// Derivative-free minimisation over the closed ordered simplex.
///
/// Polls +-e_i and a few random unit directions at the current step,
/// moving to the first improving point (sorted then clamped back into the
/// simplex); the step doubles after a success (capped at its initial
/// value) and halves after a failed poll. Stops once the step drops below
/// `min_step` or the evaluation budget is spent. The objective may return
/// +inf to reject a point. The start point's evaluation is counted.
PatternSearchResult pattern_search_minimize(const std::function<double(const NodeSystem&)>& objective,
                                            const NodeSystem& start, const PatternSearchOptions& opts);

}  // namespace sot
