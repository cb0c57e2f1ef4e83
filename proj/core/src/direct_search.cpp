#include "sot/direct_search.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sot/random.hpp"

namespace sot {

PatternSearchResult pattern_search_minimize(const std::function<double(const NodeSystem&)>& objective,
                                            const NodeSystem& start, const PatternSearchOptions& opts) {
  const std::size_t n = start.size();
  PatternSearchResult r;
  r.nodes = start;
  r.value = objective(start);
  r.evaluations = 1;
  r.final_step = opts.initial_step;
  if (n == 0) return r;

  Rng rng(opts.seed);
  const int n_random = opts.random_directions < 0 ? static_cast<int>(n) + 1 : opts.random_directions;
  double step = opts.initial_step;
  std::vector<std::vector<double>> dirs;

  while (step >= opts.min_step) {
    if (r.evaluations >= opts.budget) {
      r.budget_exhausted = true;
      break;
    }
    dirs.clear();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> d(n, 0.0);
      d[i] = 1.0;
      dirs.push_back(d);
      d[i] = -1.0;
      dirs.push_back(std::move(d));
    }
    for (int k = 0; k < n_random; ++k) {
      std::vector<double> d(n);
      double norm = 0.0;
      for (double& c : d) {
        c = rng.uniform(-1.0, 1.0);
        norm += c * c;
      }
      norm = std::sqrt(norm);
      if (norm == 0.0) continue;
      for (double& c : d) c /= norm;
      std::vector<double> neg(n);
      for (std::size_t i = 0; i < n; ++i) neg[i] = -d[i];
      dirs.push_back(std::move(d));
      dirs.push_back(std::move(neg));
    }

    bool improved = false;
    for (const auto& d : dirs) {
      if (r.evaluations >= opts.budget) break;
      std::vector<double> cand(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = r.nodes[i] + step * d[i];
      NodeSystem y = NodeSystem::project(std::move(cand));
      if (y == r.nodes) continue;
      const double v = objective(y);
      ++r.evaluations;
      if (v < r.value) {
        r.nodes = std::move(y);
        r.value = v;
        improved = true;
        break;
      }
    }
    if (improved) {
      step = std::min(2.0 * step, opts.initial_step);
    } else if (r.evaluations < opts.budget) {
      step *= 0.5;
    }
  }
  r.final_step = step;
  if (step >= opts.min_step && r.evaluations >= opts.budget) r.budget_exhausted = true;
  return r;
}

}  // namespace sot
