#pragma once

#include <optional>
#include <vector>

#include "sot/ext_real.hpp"
#include "sot/node_system.hpp"
#include "sot/problem_instance.hpp"

namespace sot {

/// f(y, t) = sum_j nu_j K(t - y_j). Throws std::domain_error for t outside [0, 1].
ExtReal eval_pure(const ProblemInstance& inst, const NodeSystem& y, double t);
/// F(y, t) = J(t) + f(y, t).
ExtReal eval_weighted(const ProblemInstance& inst, const NodeSystem& y, double t);

/// Unchecked F(y, t) as a raw double.
double eval_weighted_raw(const ProblemInstance& inst, const NodeSystem& y, double t) noexcept;

/// One maximal connected component of the singularity set. A point is
/// lo == hi with both ends closed.
struct SingularComponent {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool is_point() const noexcept { return lo == hi; }
  bool contains(double t) const noexcept;
  bool contains(double a, double b) const noexcept;

  friend bool operator==(const SingularComponent&, const SingularComponent&) = default;
};

/// Sorted, disjoint description of {t in [0,1] : F(y, t) = -inf}.
struct SingularitySet {
  std::vector<SingularComponent> components;

  bool empty() const noexcept { return components.empty(); }
  bool contains(double t) const noexcept;
  /// True iff the closed interval [a, b] lies inside the set.
  bool contains_interval(double a, double b) const noexcept;
};

/// Symbolic singularity set from the field's -inf pieces and points, the
/// centers of singular attached translates and, for a singular kernel, the
/// nodes themselves.
SingularitySet singularity_set(const ProblemInstance& inst, const NodeSystem& y);

/// No I_j(y) lies inside the singularity set. Decided symbolically.
bool is_regular(const ProblemInstance& inst, const NodeSystem& y);

/// (m_0, ..., m_n) with argmax witnesses.
struct MaximaVector {
  std::vector<ExtReal> m;
  /// t*_j in I_j with F(y, t*_j) = m_j; empty where m_j is -inf.
  std::vector<std::optional<double>> argmax;
  bool regular = false;

  std::size_t size() const noexcept { return m.size(); }
};

inline constexpr double kDefaultArgmaxTol = 1e-12;

/// Supremum of F(y, .) over I_j(y) with a witness.
///
/// I_j is split at field breakpoints and translate centers. On each open
/// sub-segment F is a concave piece plus concave kernel terms, so it is
/// maximised by golden-section search to location tolerance `tol`; segment
/// endpoints (their true values and the one-sided limits) are explicit
/// candidates. Throws std::invalid_argument if tol <= 0.
std::pair<ExtReal, std::optional<double>> interval_maximum(const ProblemInstance& inst,
                                                           const NodeSystem& y, std::size_t j,
                                                           double tol = kDefaultArgmaxTol);

MaximaVector interval_maxima(const ProblemInstance& inst, const NodeSystem& y,
                             double tol = kDefaultArgmaxTol);

/// max_j m_j(y); always finite for a valid instance.
ExtReal m_bar(const ProblemInstance& inst, const NodeSystem& y, double tol = kDefaultArgmaxTol);
/// min_j m_j(y).
ExtReal m_under(const ProblemInstance& inst, const NodeSystem& y, double tol = kDefaultArgmaxTol);

ExtReal max_of(const MaximaVector& mv);
ExtReal min_of(const MaximaVector& mv);

}  // namespace sot
