#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sot/ext_real.hpp"
#include "sot/node_system.hpp"
#include "sot/problem_instance.hpp"

namespace sot {

struct SolverOptions {
  double residual_tol = 1e-8;
  int max_sweeps = 500;
  int multistart = 8;
  std::uint64_t rng_seed = 0;
  long direct_search_budget = 20000;
  double argmax_tol = 1e-12;

  /// Throws std::invalid_argument unless the tolerances and counts are
  /// positive (the budget may be 0).
  void validate() const;

  friend bool operator==(const SolverOptions&, const SolverOptions&) = default;
};

enum class SolveStatus { converged, stalled, budget_exhausted };
std::string_view to_string(SolveStatus s);

/// Outcome of a solver run.
///
/// `residual` is m_bar - m_under at `nodes` for the equioscillation route
/// and the final pattern-search step for pure direct-search results;
/// status == converged implies residual <= residual_tol. `evaluations`
/// counts maxima evaluations (a partial two-interval evaluation during a
/// leveling bisection counts as one).
struct SolveResult {
  NodeSystem nodes;
  ExtReal value = ExtReal::neg_inf();
  double residual = 0.0;
  SolveStatus status = SolveStatus::stalled;
  long evaluations = 0;
  std::string method;      // "leveling", "leveling+direct_search", "direct_search"
  std::string diagnostic;  // empty unless something noteworthy happened
  /// Residual after each accepted leveling step.
  std::vector<double> residual_trace;
  /// Leveling steps rejected because they would have raised the residual.
  int rejected_steps = 0;
};

/// m_bar(y) - m_under(y). Throws std::domain_error for a singular system.
double equioscillation_residual(const ProblemInstance& inst, const NodeSystem& y,
                                double argmax_tol = 1e-12);

/// Leveling sweeps from the uniform start; see find_equioscillation_from.
SolveResult find_equioscillation(const ProblemInstance& inst, const SolverOptions& opts = {});

/// Remez-style leveling: sweep i = 1..n, placing y_i inside (y_{i-1}, y_{i+1})
/// by bisection on the sign of m_{i-1} - m_i, until the residual drops below
/// residual_tol. A step that would raise the residual is rejected. If a
/// sweep fails to decrease the residual by 1e-14, falls back to direct
/// search on the residual from multistart points.
SolveResult find_equioscillation_from(const ProblemInstance& inst, const NodeSystem& start,
                                      const SolverOptions& opts = {});

/// Approximates M(S) = inf m_bar: the better of the equioscillation route
/// and an independent direct search on m_bar.
SolveResult minimize_max(const ProblemInstance& inst, const SolverOptions& opts = {});

/// Approximates m(S) = sup m_under over regular systems by multistart direct
/// search. With a zero budget the best seed is returned as budget_exhausted.
SolveResult maximize_min(const ProblemInstance& inst, const SolverOptions& opts = {});

struct MultistartReport {
  std::vector<SolveResult> runs;
  /// Largest max-norm distance between converged runs.
  double max_pairwise_distance = 0.0;
  int converged_runs = 0;
};

/// Runs the leveling solver from the uniform start and opts.multistart - 1
/// random regular starts. Disagreement is reported, not suppressed.
MultistartReport equioscillation_multistart(const ProblemInstance& inst, const SolverOptions& opts = {});

}  // namespace sot
