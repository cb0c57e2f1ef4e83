#include "sot/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sot {

std::string_view to_string(KernelFamily f) {
  switch (f) {
    case KernelFamily::log: return "log";
    case KernelFamily::log_shifted: return "log_shifted";
    case KernelFamily::power: return "power";
    case KernelFamily::neg_parabola_nonmonotone: return "neg_parabola_nonmonotone";
  }
  return "?";
}

KernelFamily kernel_family_from_string(std::string_view name) {
  if (name == "log") return KernelFamily::log;
  if (name == "log_shifted") return KernelFamily::log_shifted;
  if (name == "power") return KernelFamily::power;
  if (name == "neg_parabola_nonmonotone" || name == "neg_parabola")
    return KernelFamily::neg_parabola_nonmonotone;
  throw std::invalid_argument("unknown kernel family '" + std::string(name) + "'");
}

Kernel::Kernel(KernelFamily f, double p) : family_(f), param_(p) {
  switch (f) {
    case KernelFamily::log:
      flags_ = {.singular = true, .monotone = true, .strictly_monotone = true, .strictly_concave = true};
      break;
    case KernelFamily::log_shifted:
      if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("log_shifted: eps must be > 0");
      flags_ = {.singular = false, .monotone = true, .strictly_monotone = true, .strictly_concave = true};
      break;
    case KernelFamily::power:
      if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("power: alpha must lie in (0, 1]");
      flags_ = {.singular = false, .monotone = true, .strictly_monotone = true, .strictly_concave = p < 1.0};
      break;
    case KernelFamily::neg_parabola_nonmonotone:
      if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("neg_parabola_nonmonotone: c must lie in (0, 1)");
      flags_ = {.singular = false, .monotone = false, .strictly_monotone = false, .strictly_concave = true};
      break;
  }
}

Kernel Kernel::log() { return Kernel(KernelFamily::log, 0.0); }
Kernel Kernel::log_shifted(double eps) { return Kernel(KernelFamily::log_shifted, eps); }
Kernel Kernel::power(double alpha) { return Kernel(KernelFamily::power, alpha); }
Kernel Kernel::neg_parabola(double c) { return Kernel(KernelFamily::neg_parabola_nonmonotone, c); }

Kernel Kernel::reflect() const {
  Kernel k = *this;
  k.reflected_ = !reflected_;
  return k;
}

double Kernel::eval_raw(double t) const noexcept {
  // Every family depends on |t| only, so K(-t) == K(t) and the reflection
  // flag never changes the value.
  const double a = std::fabs(t);
  switch (family_) {
    case KernelFamily::log: return std::log(a);  // log(0) == -inf
    case KernelFamily::log_shifted: return std::log(a + param_);
    case KernelFamily::power: return param_ == 1.0 ? a : std::pow(a, param_);
    case KernelFamily::neg_parabola_nonmonotone: {
      const double d = a - param_;
      return -d * d;
    }
  }
  return kNegInf;
}

ExtReal Kernel::operator()(double t) const {
  if (!(t >= -1.0 && t <= 1.0)) throw std::domain_error("kernel evaluated outside [-1, 1]");
  return ExtReal(eval_raw(t));
}

double Kernel::supremum() const noexcept {
  switch (family_) {
    case KernelFamily::log: return 0.0;
    case KernelFamily::log_shifted: return std::log(1.0 + param_);
    case KernelFamily::power: return 1.0;
    case KernelFamily::neg_parabola_nonmonotone: return 0.0;
  }
  return 0.0;
}

std::string Kernel::describe() const {
  std::ostringstream os;
  os << to_string(family_);
  if (family_ != KernelFamily::log) os << "(" << param_ << ")";
  if (reflected_) os << "[reflected]";
  return os.str();
}

KernelPropertyReport check_kernel_properties(const Kernel& kernel, int grid_size) {
  if (grid_size < 16) throw std::invalid_argument("check_kernel_properties: grid_size must be >= 16");
  const int n = grid_size;
  const double h = 1.0 / n;

  KernelPropertyReport r;
  r.singular = kernel.eval_raw(0.0) == kNegInf;

  // Side samples exclude the origin: sign * k/n for k = 1..n.
  auto sample = [&](int sign, int k) { return kernel.eval_raw(sign * (k * h)); };

  constexpr double kConcaveSlack = 1e-10;
  constexpr double kStrictThreshold = -1e-13;
  double worst = -std::numeric_limits<double>::infinity();
  bool concave = true;
  bool strict = true;
  for (int sign : {-1, 1}) {
    for (int k = 2; k < n; ++k) {
      const double d2 = sample(sign, k - 1) - 2.0 * sample(sign, k) + sample(sign, k + 1);
      worst = std::max(worst, d2);
      if (d2 > kConcaveSlack) concave = false;
      if (!(d2 < kStrictThreshold)) strict = false;
    }
  }
  r.concave = concave;
  r.strictly_concave = concave && strict;
  r.max_second_difference = worst;

  // (M): nonincreasing on [-1, 0) and nondecreasing on (0, 1].
  bool mono = true;
  bool strict_mono = true;
  for (int k = n; k > 1; --k) {  // t = -k/n increasing toward 0
    const double a = sample(-1, k), b = sample(-1, k - 1);
    if (b > a) mono = false;
    if (!(b < a)) strict_mono = false;
  }
  for (int k = 1; k < n; ++k) {
    const double a = sample(1, k), b = sample(1, k + 1);
    if (b < a) mono = false;
    if (!(b > a)) strict_mono = false;
  }
  r.monotone = mono;
  r.strictly_monotone = mono && strict_mono;

  const KernelFlags& f = kernel.flags();
  r.matches_declared = r.concave && r.singular == f.singular && r.monotone == f.monotone &&
                       r.strictly_monotone == f.strictly_monotone &&
                       r.strictly_concave == f.strictly_concave;
  return r;
}

}  // namespace sot
