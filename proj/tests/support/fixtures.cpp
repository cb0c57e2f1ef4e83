#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sot::support {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

std::vector<double> chebyshev_nodes(int n) {
  std::vector<double> out;
  for (int k = 1; k <= n; ++k) out.push_back((1.0 + std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n))) / 2.0);
  std::sort(out.begin(), out.end());
  return out;
}

// The monic Chebyshev polynomial on [-1, 1] has sup norm 2^(1-n); mapping
// to [0, 1] scales a monic degree-n polynomial by 2^-n.
double chebyshev_log_norm(int n) { return (1.0 - n) * std::log(2.0) - n * std::log(2.0); }

std::vector<NamedField> fixture_fields() {
  return {
      {"zero", FieldFunction::constant(0.0)},
      {"step", FieldFunction({0.0, 0.5, 1.0}, {ConstantPiece{0.0}, ConstantPiece{0.3}})},
      {"quadratic", FieldFunction({0.0, 1.0}, {QuadraticPiece{-1.0, 0.8, -0.16}})},
      {"gap", FieldFunction({0.0, 0.3, 0.5, 1.0}, {ConstantPiece{0.0}, NegInfPiece{}, ConstantPiece{0.0}})},
  };
}

std::vector<NamedKernel> strict_kernels() {
  return {{"log", Kernel::log()}, {"log_shifted", Kernel::log_shifted(0.1)}, {"power", Kernel::power(0.5)}};
}

FieldFunction random_field(Rng& rng) {
  const int pieces_n = 1 + static_cast<int>(rng.below(3));
  std::vector<double> bp{0.0};
  for (int k = 1; k < pieces_n; ++k) bp.push_back(rng.uniform(0.0, 1.0));
  bp.push_back(1.0);
  std::sort(bp.begin(), bp.end());
  for (std::size_t k = 1; k + 1 < bp.size(); ++k) {
    if (bp[k] - bp[k - 1] < 0.05 || bp[k + 1] - bp[k] < 0.05) return random_field(rng);
  }

  std::vector<FieldPiece> pieces;
  bool any_finite = false;
  for (int k = 0; k < pieces_n; ++k) {
    const double lo = bp[static_cast<std::size_t>(k)], hi = bp[static_cast<std::size_t>(k) + 1];
    const double mid = 0.5 * (lo + hi);
    const bool last = k + 1 == pieces_n;
    const std::uint64_t kind = rng.below(8);
    if (kind == 0 && (any_finite || !last)) {
      pieces.push_back(NegInfPiece{});
      continue;
    }
    any_finite = true;
    const double level = rng.uniform(-1.0, 1.0);
    if (kind <= 3) {
      pieces.push_back(ConstantPiece{level});
    } else if (kind <= 5) {
      const double slope = rng.uniform(-2.0, 2.0);
      pieces.push_back(AffinePiece{slope, level - slope * mid});
    } else {
      const double a = -rng.uniform(0.0, 3.0);
      const double vertex = rng.uniform(-0.2, 1.2);
      // a (t - vertex)^2 + level
      pieces.push_back(QuadraticPiece{a, -2.0 * a * vertex, a * vertex * vertex + level});
    }
  }
  if (!any_finite) pieces.back() = ConstantPiece{0.0};

  std::vector<ExtReal> values(bp.size(), ExtReal::neg_inf());
  for (std::size_t k = 0; k < bp.size(); ++k) {
    if (rng.below(4) == 0) values[k] = ExtReal::finite(rng.uniform(-0.5, 1.5));  // possible isolated spike
  }
  std::vector<Translate> translates;
  if (rng.below(5) == 0) translates.push_back({rng.uniform(0.2, 1.0), rng.uniform(0.0, 1.0), Kernel::log()});
  return FieldFunction(std::move(bp), std::move(pieces), std::move(values), std::move(translates));
}

Kernel random_kernel(Rng& rng, bool monotone_only) {
  switch (rng.below(monotone_only ? 3 : 4)) {
    case 0: return Kernel::log();
    case 1: return Kernel::log_shifted(rng.uniform(0.01, 0.5));
    case 2: return Kernel::power(rng.uniform(0.2, 1.0));
    default: return Kernel::neg_parabola(rng.uniform(0.2, 0.8));
  }
}

ProblemInstance random_instance(Rng& rng, int n, const Kernel& kernel) {
  std::vector<double> w;
  for (int j = 0; j < n; ++j) w.push_back(rng.uniform(0.5, 2.0));
  return ProblemInstance(std::move(w), kernel, random_field(rng));
}

NodeSystem spaced_nodes(Rng& rng, std::size_t n, double min_gap) {
  for (;;) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform();
    std::sort(v.begin(), v.end());
    double prev = 0.0;
    bool ok = true;
    for (double x : v) {
      ok = ok && x - prev >= min_gap;
      prev = x;
    }
    if (ok && 1.0 - prev >= min_gap) return NodeSystem(std::move(v));
  }
}

double direct_F(const ProblemInstance& inst, const NodeSystem& y, double t) {
  double acc = inst.field()(t).raw();
  for (std::size_t j = 0; j < y.size(); ++j) acc += inst.weights()[j] * inst.kernel()(t - y[j]).raw();
  return acc;
}

GridMaxima dense_grid_maxima(const ProblemInstance& inst, const NodeSystem& y, long samples) {
  const std::size_t n = y.size();
  std::vector<double> ends{0.0};
  for (std::size_t j = 0; j < n; ++j) ends.push_back(y[j]);
  ends.push_back(1.0);

  GridMaxima g;
  g.m.assign(n + 1, kNegInf);
  auto credit = [&](double t) {
    const double v = direct_F(inst, y, t);
    for (std::size_t j = 0; j <= n; ++j) {
      if (ends[j] <= t && t <= ends[j + 1]) g.m[j] = std::max(g.m[j], v);
    }
  };
  for (long k = 0; k < samples; ++k) credit(static_cast<double>(k) / static_cast<double>(samples - 1));
  for (double t : ends) credit(t);
  for (double t : inst.field().breakpoints()) credit(t);
  return g;
}

namespace {

WideningParams draw_points(Rng& rng) {
  for (;;) {
    double v[4];
    for (double& x : v) x = rng.uniform();
    std::sort(v, v + 4);
    if (rng.below(10) == 0) v[0] = 0.0;
    if (rng.below(10) == 0) v[3] = 1.0;
    if (v[1] - v[0] < 1e-3 || v[2] - v[1] < 1e-3 || v[3] - v[2] < 1e-3) continue;
    return {rng.uniform(0.2, 5.0), rng.uniform(0.2, 5.0), v[0], v[1], v[2], v[3]};
  }
}

}  // namespace

WideningParams random_widening(Rng& rng) { return draw_points(rng); }

WideningParams random_widening_kappa_one(Rng& rng) {
  for (;;) {
    WideningParams p = draw_points(rng);
    p.alpha = p.a - p.q * (p.beta - p.b) / p.p;
    if (p.alpha >= 0.0 && p.a - p.alpha >= 1e-3) return p;
  }
}

WideningParams random_widening_kappa(Rng& rng, bool want_ge) {
  for (;;) {
    const WideningParams p = draw_points(rng);
    const double k = p.p * (p.a - p.alpha) / (p.q * (p.beta - p.b));
    if (want_ge ? k >= 1.0 : k <= 1.0) return p;
  }
}

}  // namespace sot::support
