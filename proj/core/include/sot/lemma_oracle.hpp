#pragma once

#include <stdexcept>
#include <string_view>

#include "sot/ext_real.hpp"
#include "sot/kernel.hpp"

namespace sot {

/// Raised when a widening-lemma part is checked outside its hypotheses.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters of the widening inequality
///   p K(t - alpha) + q K(t - beta)  vs  p K(t - a) + q K(t - b)
/// with 0 <= alpha < a < b < beta <= 1 and p, q > 0.
struct WideningParams {
  double p = 1.0;
  double q = 1.0;
  double alpha = 0.0;
  double a = 0.0;
  double b = 0.0;
  double beta = 0.0;

  /// Throws HypothesisError unless the ordering and positivity hold.
  void validate() const;

  friend bool operator==(const WideningParams&, const WideningParams&) = default;
};

/// kappa = p (a - alpha) / (q (beta - b)).
double kappa(const WideningParams& params);

struct WideningSides {
  ExtReal lhs;  // p K(t - alpha) + q K(t - beta)
  ExtReal rhs;  // p K(t - a) + q K(t - b)
};

WideningSides widening_sides(const Kernel& kernel, const WideningParams& params, double t);

/// Lemma parts that make a checkable claim. Part (d) is the strictness
/// refinement of (a)-(c) and is folded into those checks.
enum class WideningPart { a, b, c, e };

std::string_view to_string(WideningPart part);
WideningPart widening_part_from_string(std::string_view s);

inline constexpr double kWideningSlack = 1e-10;
/// |kappa - 1| below this counts as kappa == 1 for part (c).
inline constexpr double kKappaOneTol = 1e-12;

struct ViolationReport {
  WideningPart part = WideningPart::a;
  int samples = 0;
  /// Samples where the claimed inequality fails by more than the slack.
  int violations = 0;
  double worst_violation = 0.0;
  /// Whether strict inequality is claimed (strict concavity for a-c,
  /// strict monotonicity for e).
  bool strict_required = false;
  /// Interior samples whose margin is not > 0 while strictness is claimed.
  int strict_failures = 0;
  /// Margin (claimed-larger side minus claimed-smaller side) at the midpoint
  /// of the first t-range; +inf when the smaller side is -inf.
  double midpoint_margin = 0.0;

  bool ok() const noexcept { return violations == 0 && strict_failures == 0; }
};

/// Samples `grid` points (endpoints included) on each t-range of the part:
/// (a) [0, alpha], (b) [beta, 1], (c) [0, alpha] and [beta, 1], (e) [a, b].
/// Throws HypothesisError if the part's hypotheses do not hold.
ViolationReport check_widening_part(const Kernel& kernel, const WideningParams& params,
                                    WideningPart part, int grid = 1000);

}  // namespace sot
