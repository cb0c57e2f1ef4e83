#include "sot/lemma_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace sot {

void WideningParams::validate() const {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q))
    throw HypothesisError("widening: p and q must be positive");
  if (!(0.0 <= alpha && alpha < a && a < b && b < beta && beta <= 1.0))
    throw HypothesisError("widening: need 0 <= alpha < a < b < beta <= 1");
}

double kappa(const WideningParams& params) {
  params.validate();
  return params.p * (params.a - params.alpha) / (params.q * (params.beta - params.b));
}

WideningSides widening_sides(const Kernel& kernel, const WideningParams& prm, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("widening: t outside [0, 1]");
  // Kernel::operator() rejects shifts outside [-1, 1].
  const ExtReal lhs = scale(prm.p, kernel(t - prm.alpha)) + scale(prm.q, kernel(t - prm.beta));
  const ExtReal rhs = scale(prm.p, kernel(t - prm.a)) + scale(prm.q, kernel(t - prm.b));
  return {lhs, rhs};
}

std::string_view to_string(WideningPart part) {
  switch (part) {
    case WideningPart::a: return "a";
    case WideningPart::b: return "b";
    case WideningPart::c: return "c";
    case WideningPart::e: return "e";
  }
  return "?";
}

WideningPart widening_part_from_string(std::string_view s) {
  if (s == "a") return WideningPart::a;
  if (s == "b") return WideningPart::b;
  if (s == "c") return WideningPart::c;
  if (s == "e") return WideningPart::e;
  throw std::invalid_argument("unknown widening part '" + std::string(s) + "'");
}

namespace {

// larger - smaller with -inf handled; +inf when only `smaller` is -inf.
double margin(ExtReal larger, ExtReal smaller) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (smaller.is_neg_inf()) return larger.is_neg_inf() ? 0.0 : inf;
  if (larger.is_neg_inf()) return -inf;
  return larger.value() - smaller.value();
}

}  // namespace

ViolationReport check_widening_part(const Kernel& kernel, const WideningParams& prm,
                                    WideningPart part, int grid) {
  if (grid < 2) throw std::invalid_argument("widening: grid must be >= 2");
  const double k = kappa(prm);  // validates ordering
  const KernelFlags& fl = kernel.flags();

  std::vector<std::pair<double, double>> ranges;
  switch (part) {
    case WideningPart::a:
      if (!fl.monotone || k < 1.0 - kKappaOneTol) throw HypothesisError("part (a) needs (M) and kappa >= 1");
      ranges = {{0.0, prm.alpha}};
      break;
    case WideningPart::b:
      if (!fl.monotone || k > 1.0 + kKappaOneTol) throw HypothesisError("part (b) needs (M) and kappa <= 1");
      ranges = {{prm.beta, 1.0}};
      break;
    case WideningPart::c:
      if (std::fabs(k - 1.0) > kKappaOneTol) throw HypothesisError("part (c) needs kappa == 1");
      ranges = {{0.0, prm.alpha}, {prm.beta, 1.0}};
      break;
    case WideningPart::e:
      if (!fl.monotone) throw HypothesisError("part (e) needs (M)");
      ranges = {{prm.a, prm.b}};
      break;
  }

  ViolationReport rep;
  rep.part = part;
  rep.strict_required = part == WideningPart::e ? fl.strictly_monotone : fl.strictly_concave;

  auto signed_margin = [&](double t) {
    const WideningSides s = widening_sides(kernel, prm, t);
    // (a)-(c) claim lhs <= rhs; (e) claims lhs >= rhs.
    return part == WideningPart::e ? margin(s.lhs, s.rhs) : margin(s.rhs, s.lhs);
  };

  for (const auto& [lo, hi] : ranges) {
    const int count = hi > lo ? grid : 1;
    for (int i = 0; i < count; ++i) {
      const double t = count == 1 ? lo : (i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1));
      const double mg = signed_margin(t);
      ++rep.samples;
      if (mg < -kWideningSlack) {
        ++rep.violations;
        rep.worst_violation = std::max(rep.worst_violation, -mg);
      }
      const bool interior = i > 0 && i < count - 1;
      if (rep.strict_required && interior && !(mg > 0.0)) ++rep.strict_failures;
    }
  }
  rep.midpoint_margin = signed_margin(0.5 * (ranges.front().first + ranges.front().second));
  return rep;
}

}  // namespace sot
