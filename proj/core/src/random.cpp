#include "sot/random.hpp"

#include <algorithm>

#include "sot/problem_instance.hpp"
#include "sot/translates.hpp"

namespace sot {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  // splitmix64 finaliser over seed + index.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

NodeSystem random_node_system(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& y : v) y = rng.uniform();
  std::sort(v.begin(), v.end());
  return NodeSystem(std::move(v));
}

std::optional<NodeSystem> random_regular_node_system(const ProblemInstance& inst, Rng& rng,
                                                     int max_tries) {
  for (int i = 0; i < max_tries; ++i) {
    NodeSystem y = random_node_system(rng, static_cast<std::size_t>(inst.n()));
    if (is_regular(inst, y)) return y;
  }
  return std::nullopt;
}

}  // namespace sot
