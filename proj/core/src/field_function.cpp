#include "sot/field_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sot {

double piece_value(const FieldPiece& piece, double t) noexcept {
  struct Visitor {
    double t;
    double operator()(const NegInfPiece&) const { return kNegInf; }
    double operator()(const ConstantPiece& p) const { return p.c; }
    double operator()(const AffinePiece& p) const { return p.slope * t + p.intercept; }
    double operator()(const QuadraticPiece& p) const { return (p.a * t + p.b) * t + p.c; }
  };
  return std::visit(Visitor{t}, piece);
}

namespace {

void check_piece(const FieldPiece& piece, std::size_t k) {
  auto fail = [k](const char* what) {
    throw std::invalid_argument("field piece " + std::to_string(k) + ": " + what);
  };
  if (auto* c = std::get_if<ConstantPiece>(&piece)) {
    if (!std::isfinite(c->c)) fail("constant must be finite");
  } else if (auto* a = std::get_if<AffinePiece>(&piece)) {
    if (!std::isfinite(a->slope) || !std::isfinite(a->intercept)) fail("affine coefficients must be finite");
  } else if (auto* q = std::get_if<QuadraticPiece>(&piece)) {
    if (!std::isfinite(q->a) || !std::isfinite(q->b) || !std::isfinite(q->c))
      fail("quadratic coefficients must be finite");
    if (q->a > 0.0) fail("quadratic piece must be concave (a <= 0)");
  }
}

// Maximum of a concave-or-affine piece over [lo, hi].
double piece_sup(const FieldPiece& piece, double lo, double hi) {
  if (is_neg_inf_piece(piece)) return kNegInf;
  double best = std::max(piece_value(piece, lo), piece_value(piece, hi));
  if (auto* q = std::get_if<QuadraticPiece>(&piece); q && q->a < 0.0) {
    const double vertex = -q->b / (2.0 * q->a);
    if (vertex > lo && vertex < hi) best = std::max(best, piece_value(piece, vertex));
  }
  return best;
}

}  // namespace

FieldFunction::FieldFunction(std::vector<double> breakpoints, std::vector<FieldPiece> pieces,
                             std::vector<ExtReal> point_values, std::vector<Translate> translates,
                             bool non_usc_override)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      point_values_(std::move(point_values)),
      translates_(std::move(translates)),
      non_usc_override_(non_usc_override) {
  const std::size_t nb = breakpoints_.size();
  if (nb < 2) throw std::invalid_argument("field needs at least the breakpoints 0 and 1");
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
    throw std::invalid_argument("field breakpoints must start at 0 and end at 1");
  for (std::size_t k = 1; k < nb; ++k) {
    if (!(breakpoints_[k] > breakpoints_[k - 1]))
      throw std::invalid_argument("field breakpoints must be strictly increasing");
  }
  if (pieces_.size() != nb - 1)
    throw std::invalid_argument("field needs exactly one piece per breakpoint interval");
  for (std::size_t k = 0; k < pieces_.size(); ++k) check_piece(pieces_[k], k);
  if (point_values_.empty()) point_values_.assign(nb, ExtReal::neg_inf());
  if (point_values_.size() != nb)
    throw std::invalid_argument("field needs one point value per breakpoint");
  for (const Translate& tr : translates_) {
    if (!(tr.weight > 0.0) || !std::isfinite(tr.weight))
      throw std::invalid_argument("translate weight must be positive");
    if (!(tr.center >= 0.0 && tr.center <= 1.0))
      throw std::invalid_argument("translate center must lie in [0, 1]");
  }

  if (!non_usc_override_) {
    for (std::size_t k = 0; k < nb; ++k) {
      double v = point_values_[k].raw();
      if (k > 0) v = std::max(v, piece_value(pieces_[k - 1], breakpoints_[k]));
      if (k + 1 < nb) v = std::max(v, piece_value(pieces_[k], breakpoints_[k]));
      point_values_[k] = ExtReal(v);
    }
  }
}

FieldFunction FieldFunction::constant(double c) {
  return FieldFunction({0.0, 1.0}, {ConstantPiece{c}}, {ExtReal(c), ExtReal(c)});
}

std::size_t FieldFunction::breakpoint_index(double t) const noexcept {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it != breakpoints_.end() && *it == t) return static_cast<std::size_t>(it - breakpoints_.begin());
  return npos;
}

std::size_t FieldFunction::piece_index(double t) const noexcept {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - breakpoints_.begin());
  k = k == 0 ? 0 : k - 1;
  return std::min(k, pieces_.size() - 1);
}

double FieldFunction::translates_raw(double t) const noexcept {
  double s = 0.0;
  for (const Translate& tr : translates_) s += tr.weight * tr.kernel.eval_raw(t - tr.center);
  return s;
}

double FieldFunction::eval_raw(double t) const noexcept {
  const std::size_t b = breakpoint_index(t);
  const double base = b != npos ? point_values_[b].raw() : piece_value(pieces_[piece_index(t)], t);
  if (translates_.empty() || base == kNegInf) return base;
  return base + translates_raw(t);
}

ExtReal FieldFunction::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("field evaluated outside [0, 1]");
  return ExtReal(eval_raw(t));
}

double FieldFunction::supremum_bound() const noexcept {
  double s = kNegInf;
  for (std::size_t k = 0; k < pieces_.size(); ++k)
    s = std::max(s, piece_sup(pieces_[k], breakpoints_[k], breakpoints_[k + 1]));
  for (const ExtReal& v : point_values_) s = std::max(s, v.raw());
  if (s == kNegInf) return s;
  for (const Translate& tr : translates_) s += tr.weight * tr.kernel.supremum();
  return s;
}

bool FieldFunction::is_upper_semicontinuous() const noexcept {
  const std::size_t nb = breakpoints_.size();
  for (std::size_t k = 0; k < nb; ++k) {
    const double v = point_values_[k].raw();
    if (k > 0 && v < piece_value(pieces_[k - 1], breakpoints_[k])) return false;
    if (k + 1 < nb && v < piece_value(pieces_[k], breakpoints_[k])) return false;
  }
  return true;
}

FieldFunction FieldFunction::with_translate(const Translate& tr) const {
  std::vector<Translate> trs = translates_;
  trs.push_back(tr);
  return FieldFunction(breakpoints_, pieces_, point_values_, std::move(trs), non_usc_override_);
}

FieldFunction FieldFunction::reflect() const {
  struct Mirror {
    FieldPiece operator()(const NegInfPiece& p) const { return p; }
    FieldPiece operator()(const ConstantPiece& p) const { return p; }
    FieldPiece operator()(const AffinePiece& p) const {
      return AffinePiece{-p.slope, p.slope + p.intercept};
    }
    FieldPiece operator()(const QuadraticPiece& p) const {
      // a(1-t)^2 + b(1-t) + c = a t^2 - (2a + b) t + (a + b + c)
      return QuadraticPiece{p.a, -(2.0 * p.a + p.b), p.a + p.b + p.c};
    }
  };
  std::vector<double> bps(breakpoints_.size());
  std::vector<ExtReal> pvs(point_values_.size());
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    const std::size_t r = breakpoints_.size() - 1 - k;
    bps[k] = 1.0 - breakpoints_[r];
    pvs[k] = point_values_[r];
  }
  bps.front() = 0.0;
  bps.back() = 1.0;
  std::vector<FieldPiece> pcs;
  pcs.reserve(pieces_.size());
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) pcs.push_back(std::visit(Mirror{}, *it));
  std::vector<Translate> trs;
  trs.reserve(translates_.size());
  for (const Translate& tr : translates_) trs.push_back({tr.weight, 1.0 - tr.center, tr.kernel.reflect()});
  return FieldFunction(std::move(bps), std::move(pcs), std::move(pvs), std::move(trs), non_usc_override_);
}

NFieldReport validate_n_field(const FieldFunction& field, int n) {
  NFieldReport r;
  for (const FieldPiece& p : field.pieces()) {
    if (!is_neg_inf_piece(p)) r.finite_on_interval = true;
  }
  const auto& bps = field.breakpoints();
  for (std::size_t k = 0; k < bps.size(); ++k) {
    if (field.eval_raw(bps[k]) == kNegInf) continue;
    if (k == 0 || k + 1 == bps.size())
      ++r.finite_endpoints;
    else
      ++r.finite_interior_points;
  }
  r.weighted_count = r.finite_on_interval ? std::numeric_limits<double>::infinity()
                                          : r.finite_interior_points + 0.5 * r.finite_endpoints;
  r.valid = r.weighted_count > n;
  return r;
}

}  // namespace sot
