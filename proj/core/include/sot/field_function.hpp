#pragma once

#include <cstddef>
#include <limits>
#include <variant>
#include <vector>

#include "sot/ext_real.hpp"
#include "sot/kernel.hpp"

namespace sot {

// Piece types of a field function. Coefficients are in the global variable t,
// so an affine piece is slope * t + intercept on its own sub-interval.
struct NegInfPiece {
  friend bool operator==(const NegInfPiece&, const NegInfPiece&) = default;
};
struct ConstantPiece {
  double c = 0.0;
  friend bool operator==(const ConstantPiece&, const ConstantPiece&) = default;
};
struct AffinePiece {
  double slope = 0.0;
  double intercept = 0.0;
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};
/// a t^2 + b t + c with a <= 0.
struct QuadraticPiece {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  friend bool operator==(const QuadraticPiece&, const QuadraticPiece&) = default;
};

using FieldPiece = std::variant<NegInfPiece, ConstantPiece, AffinePiece, QuadraticPiece>;

/// Value of the piece formula at t (its continuous extension); -inf for NegInfPiece.
double piece_value(const FieldPiece& piece, double t) noexcept;
inline bool is_neg_inf_piece(const FieldPiece& p) noexcept { return std::holds_alternative<NegInfPiece>(p); }

/// weight * K(t - center), added pointwise to a field.
struct Translate {
  double weight = 1.0;
  double center = 0.0;
  Kernel kernel = Kernel::log();

  friend bool operator==(const Translate&, const Translate&) = default;
};

/// Piecewise upper semicontinuous field function J on [0, 1].
///
/// Breakpoints 0 = t_0 < ... < t_K = 1 split [0, 1] into open pieces; each
/// breakpoint carries an explicit point value. Construction raises every
/// point value to the max of its declared value and the adjacent one-sided
/// limits, which makes the result upper semicontinuous. Passing
/// `non_usc_override` keeps the declared point values as given.
class FieldFunction {
 public:
  FieldFunction(std::vector<double> breakpoints, std::vector<FieldPiece> pieces,
                std::vector<ExtReal> point_values = {}, std::vector<Translate> translates = {},
                bool non_usc_override = false);

  /// J == c on [0, 1].
  static FieldFunction constant(double c = 0.0);

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<FieldPiece>& pieces() const noexcept { return pieces_; }
  const std::vector<ExtReal>& point_values() const noexcept { return point_values_; }
  const std::vector<Translate>& translates() const noexcept { return translates_; }
  bool non_usc_override() const noexcept { return non_usc_override_; }

  /// J(t) for t in [0, 1]; throws std::domain_error outside.
  ExtReal operator()(double t) const;
  /// Unchecked J(t) including translates; -inf as a double.
  double eval_raw(double t) const noexcept;
  /// Sum of the attached translates at t.
  double translates_raw(double t) const noexcept;

  /// Index k of the breakpoint equal to t, or npos.
  std::size_t breakpoint_index(double t) const noexcept;
  /// Index k of the piece whose open interval (t_k, t_{k+1}) contains t.
  /// t must not be a breakpoint.
  std::size_t piece_index(double t) const noexcept;

  /// Upper bound of J on [0, 1] ignoring translates that are unbounded below.
  double supremum_bound() const noexcept;
  /// True iff every point value dominates its adjacent one-sided limits.
  bool is_upper_semicontinuous() const noexcept;

  FieldFunction with_translate(const Translate& tr) const;
  /// J*(t) = J(1 - t).
  FieldFunction reflect() const;

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  friend bool operator==(const FieldFunction&, const FieldFunction&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<FieldPiece> pieces_;
  std::vector<ExtReal> point_values_;
  std::vector<Translate> translates_;
  bool non_usc_override_ = false;
};

/// Weighted count of the finiteness domain of a field function.
struct NFieldReport {
  bool valid = false;
  /// +inf when J is finite on a set of positive length.
  double weighted_count = 0.0;
  bool finite_on_interval = false;
  int finite_interior_points = 0;
  int finite_endpoints = 0;
};

/// A field is an n-field function iff its finiteness set has weighted
/// cardinality > n, where 0 and 1 count 1/2 and interior points count 1.
NFieldReport validate_n_field(const FieldFunction& field, int n);

}  // namespace sot
