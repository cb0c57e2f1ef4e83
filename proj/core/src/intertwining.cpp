#include "sot/intertwining.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "sot/random.hpp"

namespace sot {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDistinctNodes = 1e-9;
}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::x_majorizes_y: return "x_majorizes_y";
    case Relation::y_majorizes_x: return "y_majorizes_x";
    case Relation::intertwines: return "intertwines";
  }
  return "?";
}

std::string_view to_string(SearchStrategy s) {
  return s == SearchStrategy::random_pairs ? "random_pairs" : "hill_climb";
}

SearchStrategy search_strategy_from_string(std::string_view s) {
  if (s == "random_pairs") return SearchStrategy::random_pairs;
  if (s == "hill_climb") return SearchStrategy::hill_climb;
  throw std::invalid_argument("unknown search strategy '" + std::string(s) + "'");
}

std::string_view to_string(MajorizationMode m) { return m == MajorizationMode::strict ? "strict" : "weak"; }

MajorizationMode majorization_mode_from_string(std::string_view s) {
  if (s == "strict") return MajorizationMode::strict;
  if (s == "weak") return MajorizationMode::weak;
  throw std::invalid_argument("unknown majorization mode '" + std::string(s) + "'");
}

std::string_view to_string(SearchVerdict v) {
  return v == SearchVerdict::candidate_found ? "candidate_found" : "no_majorization_found";
}

Comparison compare_vectors(const MaximaVector& mx, const MaximaVector& my, double value_tol) {
  if (mx.size() != my.size()) throw std::invalid_argument("maxima vectors differ in length");
  if (!(value_tol >= 0.0)) throw std::invalid_argument("value_tol must be >= 0");
  Comparison c;
  c.margins.reserve(mx.size());
  for (std::size_t j = 0; j < mx.size(); ++j) {
    const ExtReal a = mx.m[j];
    const ExtReal b = my.m[j];
    double d;
    if (a.is_neg_inf() && b.is_neg_inf())
      d = 0.0;
    else if (b.is_neg_inf())
      d = kInf;
    else if (a.is_neg_inf())
      d = -kInf;
    else
      d = a.value() - b.value();
    c.margins.push_back(d);
    if (d > value_tol && !c.witness_up) c.witness_up = j;
    if (d < -value_tol && !c.witness_down) c.witness_down = j;
  }
  if (c.witness_up && c.witness_down)
    c.relation = Relation::intertwines;
  else if (c.witness_up)
    c.relation = Relation::x_majorizes_y;
  else if (c.witness_down)
    c.relation = Relation::y_majorizes_x;
  else
    c.relation = Relation::equal;
  return c;
}

Comparison compare_maxima(const ProblemInstance& inst, const NodeSystem& x, const NodeSystem& y,
                          double value_tol, double argmax_tol) {
  return compare_vectors(interval_maxima(inst, x, argmax_tol), interval_maxima(inst, y, argmax_tol),
                         value_tol);
}

double majorization_margin(const MaximaVector& mx, const MaximaVector& my) {
  if (mx.size() != my.size()) throw std::invalid_argument("maxima vectors differ in length");
  double margin = kInf;
  for (std::size_t j = 0; j < mx.size(); ++j) {
    const ExtReal a = mx.m[j];
    const ExtReal b = my.m[j];
    if (a.is_neg_inf()) continue;  // m_j(y) >= -inf trivially
    if (b.is_neg_inf()) return -kInf;
    margin = std::min(margin, b.value() - a.value());
  }
  return margin;
}

namespace {

struct Scored {
  double margin = -kInf;
  bool swapped = false;  // true: the first argument dominates
  bool candidate = false;
};

struct WorkerOutcome {
  long evaluated = 0;
  bool have_best = false;
  Scored best;
  NodeSystem best_x;
  NodeSystem best_y;
  bool best_regular = true;
  std::vector<PairRecord> records;
};

// Lexicographic (candidate, margin).
bool better(const Scored& a, const Scored& b) {
  if (a.candidate != b.candidate) return a.candidate;
  return a.margin > b.margin;
}

class SearchWorker {
 public:
  SearchWorker(const ProblemInstance& inst, const SearchOptions& opts, int worker, long budget)
      : inst_(inst), opts_(opts), worker_(worker), budget_(budget),
        rng_(derive_seed(opts.seed, static_cast<std::uint64_t>(worker))) {}

  WorkerOutcome run(const std::vector<std::pair<NodeSystem, NodeSystem>>& seed_pairs) {
    for (const auto& [x, y] : seed_pairs) {
      if (out_.evaluated >= budget_) break;
      const MaximaVector mx = maxima(x), my = maxima(y);
      evaluate(x, mx, y, my);
    }
    if (opts_.strategy == SearchStrategy::random_pairs) {
      while (out_.evaluated < budget_) {
        const NodeSystem x = sample(), y = sample();
        evaluate(x, maxima(x), y, maxima(y));
      }
    } else {
      while (out_.evaluated < budget_) climb();
    }
    return std::move(out_);
  }

 private:
  MaximaVector maxima(const NodeSystem& y) const { return interval_maxima(inst_, y, opts_.argmax_tol); }

  bool admissible(const NodeSystem& y) const { return opts_.admit_nonregular || is_regular(inst_, y); }

  NodeSystem sample() {
    const auto n = static_cast<std::size_t>(inst_.n());
    if (opts_.admit_nonregular) return random_node_system(rng_, n);
    if (auto y = random_regular_node_system(inst_, rng_, 100000)) return std::move(*y);
    throw std::runtime_error("search: could not sample a regular node system");
  }

  Scored score(const NodeSystem& x, const MaximaVector& mx, const NodeSystem& y,
               const MaximaVector& my) const {
    const double forward = majorization_margin(mx, my);   // y dominates x
    const double backward = majorization_margin(my, mx);  // x dominates y
    Scored s;
    s.swapped = backward > forward;
    s.margin = s.swapped ? backward : forward;
    if (x.distance(y) <= kDistinctNodes) {
      s.margin = -kInf;  // identical systems tell nothing
      return s;
    }
    const MaximaVector& lo = s.swapped ? my : mx;
    const MaximaVector& hi = s.swapped ? mx : my;
    if (opts_.mode == MajorizationMode::strict)
      s.candidate = s.margin > opts_.value_tol;
    else
      s.candidate = compare_vectors(hi, lo, opts_.value_tol).relation == Relation::x_majorizes_y;
    return s;
  }

  Scored evaluate(const NodeSystem& x, const MaximaVector& mx, const NodeSystem& y, const MaximaVector& my) {
    const Scored s = score(x, mx, y, my);
    const long index = out_.evaluated++;
    const bool improved = !out_.have_best || better(s, out_.best);
    const NodeSystem& lo = s.swapped ? y : x;
    const NodeSystem& hi = s.swapped ? x : y;
    const bool regular = mx.regular && my.regular;
    if (improved) {
      out_.have_best = true;
      out_.best = s;
      out_.best_x = lo;
      out_.best_y = hi;
      out_.best_regular = regular;
    }
    if (improved || opts_.trace_all)
      out_.records.push_back({worker_, index, lo, hi, s.margin, improved, regular});
    return s;
  }

  void climb() {
    NodeSystem x = sample(), y = sample();
    MaximaVector mx = maxima(x), my = maxima(y);
    Scored cur = evaluate(x, mx, y, my);
    const std::size_t n = x.size();
    double step = opts_.initial_step;
    while (step >= opts_.min_step && out_.evaluated < budget_) {
      bool improved = false;
      for (std::size_t c = 0; c < 2 * n && out_.evaluated < budget_; ++c) {
        for (double sign : {1.0, -1.0}) {
          if (out_.evaluated >= budget_) break;
          const bool move_x = c < n;
          const NodeSystem& base = move_x ? x : y;
          std::vector<double> v(base.values().begin(), base.values().end());
          v[c % n] += sign * step;
          NodeSystem cand = NodeSystem::project(std::move(v));
          if (cand == base || !admissible(cand)) continue;
          MaximaVector mc = maxima(cand);
          const Scored s = move_x ? evaluate(cand, mc, y, my) : evaluate(x, mx, cand, mc);
          if (better(s, cur)) {
            cur = s;
            (move_x ? x : y) = std::move(cand);
            (move_x ? mx : my) = std::move(mc);
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  const ProblemInstance& inst_;
  const SearchOptions& opts_;
  int worker_;
  long budget_;
  Rng rng_;
  WorkerOutcome out_;
};

bool in_hypothesis(const ProblemInstance& inst) {
  const KernelFlags& f = inst.kernel().flags();
  return f.strictly_concave && f.strictly_monotone && inst.field().is_upper_semicontinuous();
}

}  // namespace

SearchReport search_majorization(const ProblemInstance& inst, const SearchOptions& opts) {
  if (opts.budget < 0) throw std::invalid_argument("search budget must be >= 0");
  if (opts.workers < 1) throw std::invalid_argument("search needs at least one worker");
  if (!(opts.value_tol >= 0.0)) throw std::invalid_argument("value_tol must be >= 0");

  SearchReport rep;
  rep.instance_in_hypothesis = in_hypothesis(inst);
  if (opts.budget == 0) return rep;

  const int w = opts.workers;
  std::vector<WorkerOutcome> outcomes(static_cast<std::size_t>(w));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
  auto job = [&](int k) {
    try {
      const long share = opts.budget / w + (k < opts.budget % w ? 1 : 0);
      SearchWorker worker(inst, opts, k, share);
      static const std::vector<std::pair<NodeSystem, NodeSystem>> kNone;
      outcomes[static_cast<std::size_t>(k)] = worker.run(k == 0 ? opts.seed_pairs : kNone);
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  };
  if (w == 1) {
    job(0);
  } else {
    std::vector<std::thread> threads;
    for (int k = 0; k < w; ++k) threads.emplace_back(job, k);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Merge in worker order so the report does not depend on scheduling.
  const WorkerOutcome* best = nullptr;
  for (const WorkerOutcome& o : outcomes) {
    rep.pairs_evaluated += o.evaluated;
    rep.records.insert(rep.records.end(), o.records.begin(), o.records.end());
    if (o.have_best && (!best || better(o.best, best->best))) best = &o;
  }
  if (!best) return rep;

  rep.best_margin = best->best.margin;
  rep.best_x = best->best_x;
  rep.best_y = best->best_y;
  rep.best_pair_regular = best->best_regular;
  if (best->best.candidate) {
    const double tight = opts.argmax_tol / 10.0;
    const MaximaVector mx = interval_maxima(inst, *rep.best_x, tight);
    const MaximaVector my = interval_maxima(inst, *rep.best_y, tight);
    const double m = majorization_margin(mx, my);
    rep.reverified_margin = m;
    const bool holds = opts.mode == MajorizationMode::strict
                           ? m > opts.value_tol
                           : compare_vectors(my, mx, opts.value_tol).relation == Relation::x_majorizes_y;
    if (holds) {
      rep.verdict = SearchVerdict::candidate_found;
      rep.out_of_hypothesis = !rep.best_pair_regular || !rep.instance_in_hypothesis;
    }
  }
  return rep;
}

ReflectedProblem reflect_instance(const ProblemInstance& inst, const NodeSystem& y) {
  if (static_cast<int>(y.size()) != inst.n()) throw std::invalid_argument("node count differs from n");
  std::vector<double> w(inst.weights().rbegin(), inst.weights().rend());
  std::vector<double> nodes(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) nodes[j] = 1.0 - y[y.size() - 1 - j];
  return {ProblemInstance(std::move(w), inst.kernel().reflect(), inst.field().reflect()),
          NodeSystem(std::move(nodes))};
}

std::vector<ExtReal> MergeMap::apply(const MaximaVector& original) const {
  std::vector<ExtReal> out;
  out.reserve(sources.size());
  for (const auto& src : sources) {
    ExtReal v = ExtReal::neg_inf();
    for (std::size_t k : src) v = max(v, original.m.at(k));
    out.push_back(v);
  }
  return out;
}

AbsorbedProblem absorb_node(const ProblemInstance& inst, const NodeSystem& x, std::size_t i) {
  const auto n = static_cast<std::size_t>(inst.n());
  if (x.size() != n) throw std::invalid_argument("node count differs from n");
  if (i < 1 || i > n) throw std::out_of_range("absorb_node: index must lie in 1..n");
  if (n == 1) throw std::invalid_argument("absorb_node: reduction needs n >= 2");

  const double xi = x[i - 1];
  std::vector<double> w, nodes;
  for (std::size_t k = 0; k < n; ++k) {
    if (k + 1 == i) continue;
    w.push_back(inst.weights()[k]);
    nodes.push_back(x[k]);
  }
  FieldFunction field = inst.field().with_translate({inst.weights()[i - 1], xi, inst.kernel()});

  MergeMap merge;
  for (std::size_t j = 0; j < n; ++j) {
    if (j + 1 < i)
      merge.sources.push_back({j});
    else if (j + 1 == i)
      merge.sources.push_back({i - 1, i});
    else
      merge.sources.push_back({j + 1});
  }

  AbsorbedProblem out{ProblemInstance(std::move(w), inst.kernel(), std::move(field)),
                      NodeSystem(std::move(nodes)), std::move(merge), 0.0, false};

  const std::vector<ExtReal> expected = out.merge.apply(interval_maxima(inst, x));
  const MaximaVector reduced = interval_maxima(out.instance, out.nodes);
  bool same_pattern = true;
  for (std::size_t j = 0; j < expected.size(); ++j) {
    if (expected[j].is_finite() != reduced.m[j].is_finite()) {
      same_pattern = false;
      continue;
    }
    if (expected[j].is_finite())
      out.max_discrepancy = std::max(out.max_discrepancy, std::fabs(expected[j].value() - reduced.m[j].value()));
  }
  out.verified = same_pattern && out.max_discrepancy <= kMergeCheckTol;
  return out;
}

}  // namespace sot
