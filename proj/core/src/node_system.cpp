#include "sot/node_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sot {

NodeSystem::NodeSystem(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  double prev = 0.0;
  for (double y : nodes_) {
    if (!std::isfinite(y) || y < 0.0 || y > 1.0) throw std::invalid_argument("node outside [0, 1]");
    if (y < prev) throw std::invalid_argument("nodes must be nondecreasing");
    prev = y;
  }
}

NodeSystem NodeSystem::project(std::vector<double> raw) {
  std::sort(raw.begin(), raw.end());
  for (double& y : raw) y = std::clamp(y, 0.0, 1.0);
  return NodeSystem(std::move(raw));
}

NodeSystem NodeSystem::uniform(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<double>(j + 1) / static_cast<double>(n + 1);
  return NodeSystem(std::move(v));
}

bool NodeSystem::in_open_simplex() const noexcept {
  for (std::size_t j = 0; j <= nodes_.size(); ++j) {
    if (!(node(j) < node(j + 1))) return false;
  }
  return true;
}

double NodeSystem::distance(const NodeSystem& other) const {
  if (other.size() != size()) throw std::invalid_argument("node systems differ in size");
  double d = 0.0;
  for (std::size_t i = 0; i < size(); ++i) d = std::max(d, std::fabs(nodes_[i] - other.nodes_[i]));
  return d;
}

}  // namespace sot
