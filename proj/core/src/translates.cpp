#include "sot/translates.hpp"

#include <algorithm>
#include <stdexcept>

#include "sot/golden_section.hpp"

namespace sot {

namespace {

double pure_raw(const ProblemInstance& inst, const NodeSystem& y, double t) noexcept {
  const auto& w = inst.weights();
  const Kernel& k = inst.kernel();
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += w[i] * k.eval_raw(t - y[i]);
  return s;
}

void check_domain(const ProblemInstance& inst, const NodeSystem& y, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("t outside [0, 1]");
  if (static_cast<int>(y.size()) != inst.n()) throw std::invalid_argument("node count differs from n");
}

}  // namespace

ExtReal eval_pure(const ProblemInstance& inst, const NodeSystem& y, double t) {
  check_domain(inst, y, t);
  return ExtReal(pure_raw(inst, y, t));
}

double eval_weighted_raw(const ProblemInstance& inst, const NodeSystem& y, double t) noexcept {
  const double j = inst.field().eval_raw(t);
  if (j == kNegInf) return kNegInf;
  return j + pure_raw(inst, y, t);
}

ExtReal eval_weighted(const ProblemInstance& inst, const NodeSystem& y, double t) {
  check_domain(inst, y, t);
  return ExtReal(eval_weighted_raw(inst, y, t));
}

bool SingularComponent::contains(double t) const noexcept {
  const bool left = t > lo || (t == lo && lo_closed);
  const bool right = t < hi || (t == hi && hi_closed);
  return left && right;
}

bool SingularComponent::contains(double a, double b) const noexcept {
  const bool left = a > lo || (a == lo && lo_closed);
  const bool right = b < hi || (b == hi && hi_closed);
  return left && right;
}

bool SingularitySet::contains(double t) const noexcept {
  return std::any_of(components.begin(), components.end(),
                     [t](const SingularComponent& c) { return c.contains(t); });
}

bool SingularitySet::contains_interval(double a, double b) const noexcept {
  // Components are maximal, so a connected set lies inside the union iff it
  // lies inside one component.
  return std::any_of(components.begin(), components.end(),
                     [a, b](const SingularComponent& c) { return c.contains(a, b); });
}

SingularitySet singularity_set(const ProblemInstance& inst, const NodeSystem& y) {
  const FieldFunction& field = inst.field();
  std::vector<SingularComponent> raw;
  const auto& bps = field.breakpoints();
  for (std::size_t k = 0; k < field.pieces().size(); ++k) {
    if (is_neg_inf_piece(field.pieces()[k])) raw.push_back({bps[k], bps[k + 1], false, false});
  }
  for (std::size_t k = 0; k < bps.size(); ++k) {
    if (field.point_values()[k].is_neg_inf()) raw.push_back({bps[k], bps[k], true, true});
  }
  for (const Translate& tr : field.translates()) {
    if (tr.kernel.flags().singular) raw.push_back({tr.center, tr.center, true, true});
  }
  if (inst.kernel().flags().singular) {
    for (double node : y.values()) raw.push_back({node, node, true, true});
  }

  std::sort(raw.begin(), raw.end(), [](const SingularComponent& a, const SingularComponent& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });

  SingularitySet out;
  for (const SingularComponent& c : raw) {
    if (out.components.empty()) {
      out.components.push_back(c);
      continue;
    }
    SingularComponent& cur = out.components.back();
    const bool overlaps = c.lo < cur.hi || (c.lo == cur.hi && (cur.hi_closed || c.lo_closed));
    if (!overlaps) {
      out.components.push_back(c);
      continue;
    }
    if (c.lo == cur.lo) cur.lo_closed = cur.lo_closed || c.lo_closed;
    if (c.hi > cur.hi) {
      cur.hi = c.hi;
      cur.hi_closed = c.hi_closed;
    } else if (c.hi == cur.hi) {
      cur.hi_closed = cur.hi_closed || c.hi_closed;
    }
  }
  return out;
}

bool is_regular(const ProblemInstance& inst, const NodeSystem& y) {
  const SingularitySet xs = singularity_set(inst, y);
  for (std::size_t j = 0; j <= y.size(); ++j) {
    const auto [a, b] = y.interval(j);
    if (xs.contains_interval(a, b)) return false;
  }
  return true;
}

std::pair<ExtReal, std::optional<double>> interval_maximum(const ProblemInstance& inst,
                                                           const NodeSystem& y, std::size_t j,
                                                           double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("argmax tolerance must be positive");
  if (static_cast<int>(y.size()) != inst.n()) throw std::invalid_argument("node count differs from n");
  if (j > y.size()) throw std::out_of_range("interval index out of range");

  const auto [a, b] = y.interval(j);
  if (a == b) {
    const double v = eval_weighted_raw(inst, y, a);
    return {ExtReal(v), v == kNegInf ? std::nullopt : std::optional<double>(a)};
  }

  const FieldFunction& field = inst.field();
  std::vector<double> splits{a, b};
  for (double bp : field.breakpoints()) {
    if (bp > a && bp < b) splits.push_back(bp);
  }
  for (const Translate& tr : field.translates()) {
    if (tr.center > a && tr.center < b) splits.push_back(tr.center);
  }
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

  double best = kNegInf;
  double arg = a;
  auto consider = [&](double v, double t) {
    if (v > best) {
      best = v;
      arg = t;
    }
  };

  for (double p : splits) consider(eval_weighted_raw(inst, y, p), p);

  for (std::size_t s = 0; s + 1 < splits.size(); ++s) {
    const double lo = splits[s];
    const double hi = splits[s + 1];
    const FieldPiece& piece = field.pieces()[field.piece_index(0.5 * (lo + hi))];
    if (is_neg_inf_piece(piece)) continue;
    // Continuous extension of F on the closed segment: the piece formula
    // replaces the point values at the ends.
    auto g = [&](double t) {
      return piece_value(piece, t) + field.translates_raw(t) + pure_raw(inst, y, t);
    };
    consider(g(lo), lo);
    consider(g(hi), hi);
    const LineMaximum lm = golden_section_maximize(g, lo, hi, tol);
    consider(lm.value, lm.x);
  }

  if (best == kNegInf) return {ExtReal::neg_inf(), std::nullopt};
  return {ExtReal(best), arg};
}

MaximaVector interval_maxima(const ProblemInstance& inst, const NodeSystem& y, double tol) {
  MaximaVector mv;
  mv.m.reserve(y.size() + 1);
  mv.argmax.reserve(y.size() + 1);
  mv.regular = true;
  for (std::size_t j = 0; j <= y.size(); ++j) {
    auto [v, t] = interval_maximum(inst, y, j, tol);
    mv.regular = mv.regular && v.is_finite();
    mv.m.push_back(v);
    mv.argmax.push_back(t);
  }
  return mv;
}

ExtReal max_of(const MaximaVector& mv) {
  ExtReal r = ExtReal::neg_inf();
  for (ExtReal v : mv.m) r = max(r, v);
  return r;
}

ExtReal min_of(const MaximaVector& mv) {
  if (mv.m.empty()) return ExtReal::neg_inf();
  ExtReal r = mv.m.front();
  for (ExtReal v : mv.m) r = min(r, v);
  return r;
}

ExtReal m_bar(const ProblemInstance& inst, const NodeSystem& y, double tol) {
  return max_of(interval_maxima(inst, y, tol));
}

ExtReal m_under(const ProblemInstance& inst, const NodeSystem& y, double tol) {
  return min_of(interval_maxima(inst, y, tol));
}

}  // namespace sot
