#pragma once

#include <vector>

#include "sot/field_function.hpp"
#include "sot/kernel.hpp"

namespace sot {

/// n, positive weights, a kernel and an n-field function.
class ProblemInstance {
 public:
  /// Throws std::invalid_argument on nonpositive weights, a weight count
  /// different from n, or a field that is not an n-field function.
  ProblemInstance(std::vector<double> weights, Kernel kernel, FieldFunction field);

  /// Unit weights.
  static ProblemInstance unit(int n, Kernel kernel, FieldFunction field = FieldFunction::constant(0.0));

  int n() const noexcept { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const Kernel& kernel() const noexcept { return kernel_; }
  const FieldFunction& field() const noexcept { return field_; }

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  std::vector<double> weights_;
  Kernel kernel_;
  FieldFunction field_;
};

}  // namespace sot
