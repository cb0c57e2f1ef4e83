#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sot/node_system.hpp"

namespace sot {

class ProblemInstance;

/// Seeded generator with a platform-independent mapping to doubles.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent stream seed for worker `index`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// n sorted uniforms in [0, 1].
NodeSystem random_node_system(Rng& rng, std::size_t n);

/// Rejection-samples a regular node system; nullopt after `max_tries`.
std::optional<NodeSystem> random_regular_node_system(const ProblemInstance& inst, Rng& rng,
                                                     int max_tries = 10000);

}  // namespace sot
