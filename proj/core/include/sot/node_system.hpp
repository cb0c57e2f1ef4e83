#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace sot {

/// Ordered nodes 0 <= y_1 <= ... <= y_n <= 1 with virtual endpoints
/// y_0 = 0 and y_{n+1} = 1.
class NodeSystem {
 public:
  NodeSystem() = default;
  explicit NodeSystem(std::vector<double> nodes);
  NodeSystem(std::initializer_list<double> nodes) : NodeSystem(std::vector<double>(nodes)) {}

  /// Sorts and clamps arbitrary reals into the closed simplex.
  static NodeSystem project(std::vector<double> raw);
  /// y_j = j / (n + 1).
  static NodeSystem uniform(std::size_t n);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const double> values() const noexcept { return nodes_; }
  /// 0-based access to y_{i+1}.
  double operator[](std::size_t i) const { return nodes_[i]; }

  /// Augmented access: node(0) == 0, node(n + 1) == 1.
  double node(std::size_t j) const noexcept {
    if (j == 0) return 0.0;
    if (j > nodes_.size()) return 1.0;
    return nodes_[j - 1];
  }
  /// I_j = [y_j, y_{j+1}] for j = 0..n.
  std::pair<double, double> interval(std::size_t j) const noexcept { return {node(j), node(j + 1)}; }

  /// Strictly inside the open simplex.
  bool in_open_simplex() const noexcept;
  bool is_degenerate() const noexcept { return !in_open_simplex(); }

  /// Max-norm distance; both systems must have the same size.
  double distance(const NodeSystem& other) const;

  friend bool operator==(const NodeSystem&, const NodeSystem&) = default;

 private:
  std::vector<double> nodes_;
};

}  // namespace sot
