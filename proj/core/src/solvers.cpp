#include "sot/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sot/direct_search.hpp"
#include "sot/random.hpp"
#include "sot/translates.hpp"

namespace sot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStallDecrease = 1e-14;
constexpr double kStepNoise = 1e-14;

// Residual with +inf standing in for singular systems. Never leaves this file.
double residual_or_inf(const MaximaVector& mv) {
  if (!mv.regular) return kInf;
  return max_of(mv).value() - min_of(mv).value();
}

// Sign of m_left - m_right with -inf ordered below every finite value and
// (-inf, -inf) treated as a tie.
int compare_sign(ExtReal left, ExtReal right) {
  if (left.is_neg_inf() && right.is_neg_inf()) return 0;
  if (left < right) return -1;
  if (right < left) return 1;
  return 0;
}

struct MultistartOutcome {
  NodeSystem nodes;
  double value = kInf;
  long evaluations = 0;
  double final_step = 0.0;
  bool budget_exhausted = false;
};

// Coarse pattern search from every seed with half the budget, then the best
// point is refined with what is left.
MultistartOutcome multistart_search(const std::function<double(const NodeSystem&)>& objective,
                                    const std::vector<NodeSystem>& seeds, long budget, double min_step,
                                    std::uint64_t seed) {
  MultistartOutcome out;
  out.final_step = kInf;
  if (seeds.empty()) return out;
  if (budget <= 0) {
    for (const NodeSystem& s : seeds) {
      const double v = objective(s);
      ++out.evaluations;
      if (out.nodes.size() != s.size() || v < out.value) {
        out.nodes = s;
        out.value = v;
      }
    }
    out.budget_exhausted = true;
    return out;
  }

  const long per_seed = std::max<long>(1, budget / (2 * static_cast<long>(seeds.size())));
  for (std::size_t k = 0; k < seeds.size() && out.evaluations < budget; ++k) {
    PatternSearchOptions po;
    po.initial_step = 0.1;
    po.min_step = min_step;
    po.budget = std::min(per_seed, budget - out.evaluations);
    po.seed = derive_seed(seed, k);
    const PatternSearchResult r = pattern_search_minimize(objective, seeds[k], po);
    out.evaluations += r.evaluations;
    if (out.nodes.size() != r.nodes.size() || r.value < out.value) {
      out.nodes = r.nodes;
      out.value = r.value;
      out.final_step = r.final_step;
      out.budget_exhausted = r.budget_exhausted;
    }
  }
  if (out.evaluations < budget && out.final_step >= min_step) {
    PatternSearchOptions po;
    po.initial_step = std::min(0.1, 4.0 * out.final_step);
    po.min_step = min_step;
    po.budget = budget - out.evaluations;
    po.seed = derive_seed(seed, seeds.size());
    const PatternSearchResult r = pattern_search_minimize(objective, out.nodes, po);
    out.evaluations += r.evaluations;
    if (r.value <= out.value) {
      out.nodes = r.nodes;
      out.value = r.value;
    }
    out.final_step = r.final_step;
    out.budget_exhausted = r.budget_exhausted;
  } else if (out.final_step >= min_step) {
    out.budget_exhausted = true;
  }
  return out;
}

std::vector<NodeSystem> random_seeds(const ProblemInstance& inst, int count, std::uint64_t seed,
                                     bool regular_only) {
  std::vector<NodeSystem> seeds;
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    if (regular_only) {
      if (auto y = random_regular_node_system(inst, rng, 1000)) seeds.push_back(std::move(*y));
    } else {
      seeds.push_back(random_node_system(rng, static_cast<std::size_t>(inst.n())));
    }
  }
  return seeds;
}

SolveStatus status_for(double residual, const SolverOptions& opts, bool budget_exhausted) {
  if (residual <= opts.residual_tol) return SolveStatus::converged;
  return budget_exhausted ? SolveStatus::budget_exhausted : SolveStatus::stalled;
}

// One leveling step for node i (1-based): bisection on the sign of m_{i-1} - m_i.
std::vector<double> level_node(const ProblemInstance& inst, std::vector<double> y, std::size_t i,
                               const SolverOptions& opts, long& evaluations) {
  const NodeSystem base(y);
  double lo = base.node(i - 1);
  double hi = base.node(i + 1);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    y[i - 1] = mid;
    const NodeSystem trial(y);
    const ExtReal left = interval_maximum(inst, trial, i - 1, opts.argmax_tol).first;
    const ExtReal right = interval_maximum(inst, trial, i, opts.argmax_tol).first;
    ++evaluations;
    const int s = compare_sign(left, right);
    if (s == 0) return y;
    if (s < 0)
      lo = mid;  // I_{i-1} too low: move y_i right
    else
      hi = mid;
  }
  // Bracket collapsed: settle on its midpoint.
  y[i - 1] = 0.5 * (lo + hi);
  return y;
}

}  // namespace

void SolverOptions::validate() const {
  if (!(residual_tol > 0.0)) throw std::invalid_argument("residual_tol must be positive");
  if (max_sweeps <= 0) throw std::invalid_argument("max_sweeps must be positive");
  if (multistart <= 0) throw std::invalid_argument("multistart must be positive");
  if (direct_search_budget < 0) throw std::invalid_argument("direct_search_budget must be >= 0");
  if (!(argmax_tol > 0.0)) throw std::invalid_argument("argmax_tol must be positive");
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::stalled: return "stalled";
    case SolveStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

double equioscillation_residual(const ProblemInstance& inst, const NodeSystem& y, double argmax_tol) {
  const MaximaVector mv = interval_maxima(inst, y, argmax_tol);
  if (!mv.regular) throw std::domain_error("equioscillation residual of a singular node system");
  return residual_or_inf(mv);
}

SolveResult find_equioscillation_from(const ProblemInstance& inst, const NodeSystem& start,
                                      const SolverOptions& opts) {
  opts.validate();
  if (static_cast<int>(start.size()) != inst.n()) throw std::invalid_argument("start has wrong size");

  SolveResult res;
  res.method = "leveling";
  std::vector<double> y(start.values().begin(), start.values().end());
  double residual = residual_or_inf(interval_maxima(inst, start, opts.argmax_tol));
  ++res.evaluations;

  bool stalled = false;
  for (int sweep = 0; sweep < opts.max_sweeps && residual > opts.residual_tol; ++sweep) {
    const double before = residual;
    for (std::size_t i = 1; i <= y.size(); ++i) {
      std::vector<double> trial = level_node(inst, y, i, opts, res.evaluations);
      const double r = residual_or_inf(interval_maxima(inst, NodeSystem(trial), opts.argmax_tol));
      ++res.evaluations;
      // A step is accepted only if it does not raise the residual.
      if (r > residual + kStepNoise) {
        ++res.rejected_steps;
        continue;
      }
      y = std::move(trial);
      residual = r;
      res.residual_trace.push_back(r);
    }
    if (residual > opts.residual_tol && !(before - residual >= kStallDecrease)) {
      stalled = true;
      break;
    }
  }

  NodeSystem nodes(y);
  if (residual > opts.residual_tol) {
    // Direct-search fallback on the residual.
    res.method = "leveling+direct_search";
    res.diagnostic = stalled ? "leveling stalled" : "leveling hit max_sweeps";
    std::vector<NodeSystem> seeds{nodes};
    for (NodeSystem& s : random_seeds(inst, opts.multistart - 1, derive_seed(opts.rng_seed, 1), true))
      seeds.push_back(std::move(s));
    auto objective = [&](const NodeSystem& z) {
      return residual_or_inf(interval_maxima(inst, z, opts.argmax_tol));
    };
    const MultistartOutcome ms = multistart_search(objective, seeds, opts.direct_search_budget,
                                                   opts.residual_tol * 1e-2, derive_seed(opts.rng_seed, 2));
    res.evaluations += ms.evaluations;
    if (ms.value < residual) {
      nodes = ms.nodes;
      residual = ms.value;
    }
    if (!std::isfinite(residual)) res.diagnostic += "; no regular equioscillation candidate found";
    res.status = status_for(residual, opts, ms.budget_exhausted);
  } else {
    res.status = SolveStatus::converged;
  }

  res.nodes = nodes;
  res.residual = residual;
  res.value = m_bar(inst, nodes, opts.argmax_tol);
  return res;
}

SolveResult find_equioscillation(const ProblemInstance& inst, const SolverOptions& opts) {
  return find_equioscillation_from(inst, NodeSystem::uniform(static_cast<std::size_t>(inst.n())), opts);
}

SolveResult minimize_max(const ProblemInstance& inst, const SolverOptions& opts) {
  opts.validate();
  SolveResult eq = find_equioscillation(inst, opts);

  std::vector<NodeSystem> seeds{NodeSystem::uniform(static_cast<std::size_t>(inst.n()))};
  for (NodeSystem& s : random_seeds(inst, opts.multistart - 1, derive_seed(opts.rng_seed, 3), false))
    seeds.push_back(std::move(s));
  auto objective = [&](const NodeSystem& z) { return m_bar(inst, z, opts.argmax_tol).value(); };
  const MultistartOutcome ms = multistart_search(objective, seeds, opts.direct_search_budget,
                                                 opts.residual_tol, derive_seed(opts.rng_seed, 4));

  const long total = eq.evaluations + ms.evaluations;
  if (ms.value < eq.value.value()) {
    SolveResult ds;
    ds.method = "direct_search";
    ds.nodes = ms.nodes;
    ds.value = ExtReal(ms.value);
    ds.residual = ms.final_step;
    ds.status = status_for(ds.residual, opts, ms.budget_exhausted);
    ds.evaluations = total;
    ds.diagnostic = "direct search beat the equioscillation route (" + std::string(to_string(eq.status)) + ")";
    return ds;
  }
  eq.evaluations = total;
  return eq;
}

SolveResult maximize_min(const ProblemInstance& inst, const SolverOptions& opts) {
  opts.validate();
  std::vector<NodeSystem> seeds;
  const NodeSystem uni = NodeSystem::uniform(static_cast<std::size_t>(inst.n()));
  if (is_regular(inst, uni)) seeds.push_back(uni);
  for (NodeSystem& s : random_seeds(inst, opts.multistart - static_cast<int>(seeds.size()),
                                    derive_seed(opts.rng_seed, 5), true))
    seeds.push_back(std::move(s));

  SolveResult res;
  res.method = "direct_search";
  if (seeds.empty()) {
    res.status = SolveStatus::stalled;
    res.residual = kInf;
    res.nodes = uni;
    res.value = m_under(inst, uni, opts.argmax_tol);
    res.diagnostic = "no regular seed found";
    return res;
  }
  auto objective = [&](const NodeSystem& z) {
    const ExtReal v = m_under(inst, z, opts.argmax_tol);
    return v.is_neg_inf() ? kInf : -v.value();
  };
  const MultistartOutcome ms = multistart_search(objective, seeds, opts.direct_search_budget,
                                                 opts.residual_tol, derive_seed(opts.rng_seed, 6));
  res.nodes = ms.nodes;
  res.value = m_under(inst, ms.nodes, opts.argmax_tol);
  res.residual = opts.direct_search_budget == 0 ? kInf : ms.final_step;
  res.status = opts.direct_search_budget == 0 ? SolveStatus::budget_exhausted
                                              : status_for(res.residual, opts, ms.budget_exhausted);
  res.evaluations = ms.evaluations;
  return res;
}

MultistartReport equioscillation_multistart(const ProblemInstance& inst, const SolverOptions& opts) {
  opts.validate();
  MultistartReport rep;
  std::vector<NodeSystem> starts{NodeSystem::uniform(static_cast<std::size_t>(inst.n()))};
  for (NodeSystem& s : random_seeds(inst, opts.multistart - 1, derive_seed(opts.rng_seed, 7), true))
    starts.push_back(std::move(s));
  for (std::size_t k = 0; k < starts.size(); ++k) {
    SolverOptions o = opts;
    o.rng_seed = derive_seed(opts.rng_seed, 100 + k);
    rep.runs.push_back(find_equioscillation_from(inst, starts[k], o));
  }
  for (std::size_t a = 0; a < rep.runs.size(); ++a) {
    if (rep.runs[a].status != SolveStatus::converged) continue;
    ++rep.converged_runs;
    for (std::size_t b = a + 1; b < rep.runs.size(); ++b) {
      if (rep.runs[b].status != SolveStatus::converged) continue;
      rep.max_pairwise_distance =
          std::max(rep.max_pairwise_distance, rep.runs[a].nodes.distance(rep.runs[b].nodes));
    }
  }
  return rep;
}

}  // namespace sot
