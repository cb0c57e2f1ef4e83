#pragma once

#include <string>
#include <string_view>

#include "sot/ext_real.hpp"

namespace sot {

enum class KernelFamily {
  log,                       // ln|t|
  log_shifted,               // ln(|t| + eps)
  power,                     // |t|^alpha
  neg_parabola_nonmonotone,  // -(|t| - c)^2
};

std::string_view to_string(KernelFamily f);
KernelFamily kernel_family_from_string(std::string_view name);

/// Structural properties of a kernel. Derived from the family and its
/// parameter, never set by callers.
struct KernelFlags {
  bool singular = false;
  bool monotone = false;
  bool strictly_monotone = false;
  bool strictly_concave = false;

  friend bool operator==(const KernelFlags&, const KernelFlags&) = default;
};

/// A kernel function on [-1, 1] from a closed set of parametrised families.
///
/// Every family is concave on (-1, 0) and on (0, 1). The `reflected` variant
/// evaluates K(-t); all built-in families are even, so reflection changes the
/// description but not the values.
class Kernel {
 public:
  static Kernel log();
  static Kernel log_shifted(double eps);
  static Kernel power(double alpha);
  static Kernel neg_parabola(double c);

  KernelFamily family() const noexcept { return family_; }
  /// eps, alpha or c depending on the family; 0 for `log`.
  double parameter() const noexcept { return param_; }
  bool reflected() const noexcept { return reflected_; }
  const KernelFlags& flags() const noexcept { return flags_; }

  /// K(-t).
  Kernel reflect() const;

  /// Value at t in [-1, 1]; throws std::domain_error outside.
  ExtReal operator()(double t) const;

  /// Unchecked hot-path evaluation; returns -inf as a double at singularities.
  double eval_raw(double t) const noexcept;

  /// sup of K over [-1, 1].
  double supremum() const noexcept;

  std::string describe() const;

  friend bool operator==(const Kernel& a, const Kernel& b) noexcept {
    return a.family_ == b.family_ && a.param_ == b.param_ && a.reflected_ == b.reflected_;
  }

 private:
  Kernel(KernelFamily f, double p);

  KernelFamily family_;
  double param_;
  bool reflected_ = false;
  KernelFlags flags_;
};

/// Empirical check of the declared kernel properties on uniform grids.
struct KernelPropertyReport {
  bool singular = false;
  bool concave = false;
  bool monotone = false;
  bool strictly_monotone = false;
  bool strictly_concave = false;
  double max_second_difference = 0.0;  // largest scaled second difference seen
  bool matches_declared = false;
};

/// Samples K on grids of `grid_size` intervals per side and verifies
/// concavity (slack 1e-10), monotonicity (M) / (SM) and singularity.
/// Requires grid_size >= 16.
KernelPropertyReport check_kernel_properties(const Kernel& kernel, int grid_size);

}  // namespace sot
