#include "sot/problem_instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sot {

ProblemInstance::ProblemInstance(std::vector<double> weights, Kernel kernel, FieldFunction field)
    : weights_(std::move(weights)), kernel_(std::move(kernel)), field_(std::move(field)) {
  if (weights_.empty()) throw std::invalid_argument("instance needs n >= 1");
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be positive");
  }
  const NFieldReport rep = validate_n_field(field_, n());
  if (!rep.valid) {
    throw std::invalid_argument("field is not an " + std::to_string(n()) +
                                "-field function (weighted finite count " +
                                std::to_string(rep.weighted_count) + ")");
  }
}

ProblemInstance ProblemInstance::unit(int n, Kernel kernel, FieldFunction field) {
  if (n < 1) throw std::invalid_argument("instance needs n >= 1");
  return ProblemInstance(std::vector<double>(static_cast<std::size_t>(n), 1.0), std::move(kernel),
                         std::move(field));
}

}  // namespace sot
