#pragma once

// Test-only oracles and instance generators. Everything here is computed
// independently of the maxima pipeline in sot/translates.

#include <cstdint>
#include <string>
#include <vector>

#include "sot/lemma_oracle.hpp"
#include "sot/node_system.hpp"
#include "sot/problem_instance.hpp"
#include "sot/random.hpp"

namespace sot::support {

// Classical Chebyshev data on [0, 1]: extremal nodes and ln of the minimal
// sup norm of a monic degree-n polynomial.
std::vector<double> chebyshev_nodes(int n);
double chebyshev_log_norm(int n);

struct NamedField {
  std::string name;
  FieldFunction field;
};

// J == 0, an upward step, a concave quadratic, and a -inf gap.
std::vector<NamedField> fixture_fields();

struct NamedKernel {
  std::string name;
  Kernel kernel;
};

// log, log_shifted(0.1), power(0.5).
std::vector<NamedKernel> strict_kernels();

// Random usc field with 1..3 pieces drawn from every piece class. A -inf
// piece is only used when the remaining pieces keep the field finite on
// an interval.
FieldFunction random_field(Rng& rng);
ProblemInstance random_instance(Rng& rng, int n, const Kernel& kernel);
Kernel random_kernel(Rng& rng, bool monotone_only);

// Random node system with consecutive gaps (including to 0 and 1) of at
// least min_gap.
NodeSystem spaced_nodes(Rng& rng, std::size_t n, double min_gap);

struct GridMaxima {
  std::vector<double> m;  // -inf where every sample is -inf
};

// Brute force: F evaluated directly from J and the kernel at `samples`
// equispaced points over [0, 1] plus every node, interval end and field
// breakpoint; each sample is credited to every interval containing it.
GridMaxima dense_grid_maxima(const ProblemInstance& inst, const NodeSystem& y, long samples);

// F(y, t) summed term by term with no shortcuts.
double direct_F(const ProblemInstance& inst, const NodeSystem& y, double t);

// Widening parameter draws. Consecutive points of alpha < a < b < beta keep a
// gap of at least 1e-3; p, q lie in [0.2, 5].
WideningParams random_widening(Rng& rng);
// kappa == 1 by construction: alpha = a - q (beta - b) / p, redrawn while
// alpha < 0.
WideningParams random_widening_kappa_one(Rng& rng);
// Redraws until kappa >= 1 (want_ge) or kappa <= 1.
WideningParams random_widening_kappa(Rng& rng, bool want_ge);

}  // namespace sot::support
