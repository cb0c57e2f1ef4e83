#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sot/node_system.hpp"
#include "sot/problem_instance.hpp"
#include "sot/translates.hpp"

namespace sot {

enum class Relation { equal, x_majorizes_y, y_majorizes_x, intertwines };
std::string_view to_string(Relation r);

/// Coordinatewise comparison of two maxima vectors.
///
/// -inf sits below every finite value and (-inf, -inf) is a tie; finite
/// differences within value_tol are ties as well.
struct Comparison {
  Relation relation = Relation::equal;
  /// Some i with m_i(x) > m_i(y).
  std::optional<std::size_t> witness_up;
  /// Some j with m_j(x) < m_j(y).
  std::optional<std::size_t> witness_down;
  /// m_j(x) - m_j(y) per coordinate: 0 for a (-inf, -inf) tie, +-inf when
  /// exactly one side is -inf.
  std::vector<double> margins;
};

Comparison compare_vectors(const MaximaVector& mx, const MaximaVector& my, double value_tol);
Comparison compare_maxima(const ProblemInstance& inst, const NodeSystem& x, const NodeSystem& y,
                          double value_tol, double argmax_tol = kDefaultArgmaxTol);

/// How far m(y) dominates m(x): min_j (m_j(y) - m_j(x)) over coordinates
/// where both are finite; -inf if some m_j(x) is finite while m_j(y) is not.
double majorization_margin(const MaximaVector& mx, const MaximaVector& my);

enum class SearchStrategy { random_pairs, hill_climb };
std::string_view to_string(SearchStrategy s);
SearchStrategy search_strategy_from_string(std::string_view s);

/// strict: margin > value_tol (every jointly finite coordinate strictly
/// larger). weak: coordinatewise >= with one strict, within value_tol.
enum class MajorizationMode { strict, weak };
std::string_view to_string(MajorizationMode m);
MajorizationMode majorization_mode_from_string(std::string_view s);

enum class SearchVerdict { no_majorization_found, candidate_found };
std::string_view to_string(SearchVerdict v);

struct SearchOptions {
  long budget = 0;  // evaluated pairs
  std::uint64_t seed = 0;
  SearchStrategy strategy = SearchStrategy::random_pairs;
  double value_tol = 1e-9;
  MajorizationMode mode = MajorizationMode::strict;
  /// Diagnostic: admit node systems outside the regularity set.
  bool admit_nonregular = false;
  /// Budget is split across this many deterministic workers.
  int workers = 1;
  double argmax_tol = kDefaultArgmaxTol;
  /// Record every evaluated pair instead of improvements only.
  bool trace_all = false;
  /// Pairs evaluated first by worker 0; they count toward the budget.
  std::vector<std::pair<NodeSystem, NodeSystem>> seed_pairs;
  /// Hill-climb step schedule.
  double initial_step = 0.05;
  double min_step = 1e-7;

  friend bool operator==(const SearchOptions&, const SearchOptions&) = default;
};

/// One evaluated pair, oriented so that `y` is the (would-be) dominating system.
struct PairRecord {
  int worker = 0;
  long index = 0;  // evaluation counter within the worker
  NodeSystem x;
  NodeSystem y;
  double margin = 0.0;
  bool improved = false;
  bool regular = true;
};

struct SearchReport {
  SearchVerdict verdict = SearchVerdict::no_majorization_found;
  long pairs_evaluated = 0;
  double best_margin = -std::numeric_limits<double>::infinity();
  std::optional<NodeSystem> best_x;  // dominated
  std::optional<NodeSystem> best_y;  // dominating
  bool best_pair_regular = true;
  /// Kernel strictly concave and strictly monotone, field usc.
  bool instance_in_hypothesis = true;
  /// Candidate lies outside Y or outside the instance hypotheses.
  bool out_of_hypothesis = false;
  /// Candidate margin recomputed with a 10x tighter argmax tolerance.
  std::optional<double> reverified_margin;
  std::vector<PairRecord> records;
};

/// Randomised search for pairs x != y with m(x) <= m(y). Each pair is scored
/// in both orientations. Deterministic for a given seed and worker count.
SearchReport search_majorization(const ProblemInstance& inst, const SearchOptions& opts);

struct ReflectedProblem {
  ProblemInstance instance;
  NodeSystem nodes;
};

/// J*(t) = J(1 - t), K*(t) = K(-t), nu*_j = nu_{n+1-j}, y*_j = 1 - y_{n+1-j};
/// then F*(y*, s) = F(y, 1 - s).
ReflectedProblem reflect_instance(const ProblemInstance& inst, const NodeSystem& y);

/// Reduced-coordinate j collects the original coordinates sources[j].
struct MergeMap {
  std::vector<std::vector<std::size_t>> sources;

  std::vector<ExtReal> apply(const MaximaVector& original) const;
};

struct AbsorbedProblem {
  ProblemInstance instance;
  NodeSystem nodes;
  MergeMap merge;
  /// max_j |m*_j - merged_j| over finite coordinates (0 if all agree).
  double max_discrepancy = 0.0;
  bool verified = false;
};

inline constexpr double kMergeCheckTol = 1e-9;

/// Moves node i (1-based) into the field as the translate nu_i K(t - x_i).
/// The intervals I_{i-1} and I_i merge, so m*_{i-1} = max(m_{i-1}, m_i).
/// Throws std::out_of_range for i outside 1..n and std::invalid_argument
/// when n == 1.
AbsorbedProblem absorb_node(const ProblemInstance& inst, const NodeSystem& x, std::size_t i);

}  // namespace sot
