#include "sot/harness/run.hpp"

#include <ostream>

#include "sot/harness/golden.hpp"
#include "sot/intertwining.hpp"
#include "sot/lemma_oracle.hpp"
#include "sot/solvers.hpp"
#include "sot/translates.hpp"

namespace sot::harness {

using nlohmann::json;

namespace {

json maxima_json(const MaximaVector& mv) {
  json m = json::array(), arg = json::array();
  for (std::size_t j = 0; j < mv.size(); ++j) {
    m.push_back(ext_to_json(mv.m[j]));
    arg.push_back(mv.argmax[j] ? json(*mv.argmax[j]) : json(nullptr));
  }
  return {{"m", std::move(m)}, {"argmax", std::move(arg)}, {"regular", mv.regular}};
}

json eval_payload(const ExperimentConfig& cfg) {
  const ProblemInstance& inst = *cfg.instance;
  json points = json::array();
  for (double t : cfg.points)
    points.push_back({{"t", t}, {"F", ext_to_json(eval_weighted(inst, *cfg.nodes, t))},
                      {"f", ext_to_json(eval_pure(inst, *cfg.nodes, t))}});
  return {{"kind", "eval"}, {"nodes", nodes_to_json(*cfg.nodes)}, {"points", std::move(points)}};
}

json maxima_payload(const ExperimentConfig& cfg) {
  const ProblemInstance& inst = *cfg.instance;
  const MaximaVector mv = interval_maxima(inst, *cfg.nodes, cfg.argmax_tol);
  json p = maxima_json(mv);
  p["kind"] = "maxima";
  p["nodes"] = nodes_to_json(*cfg.nodes);
  p["m_bar"] = ext_to_json(max_of(mv));
  p["m_under"] = ext_to_json(min_of(mv));
  json sing = json::array();
  for (const auto& c : singularity_set(inst, *cfg.nodes).components)
    sing.push_back({{"lo", c.lo}, {"hi", c.hi}, {"lo_closed", c.lo_closed}, {"hi_closed", c.hi_closed}});
  p["singularity_set"] = std::move(sing);
  return p;
}

json solve_payload(const ExperimentConfig& cfg) {
  const ProblemInstance& inst = *cfg.instance;
  SolveResult r;
  if (cfg.command == Command::equioscillate)
    r = find_equioscillation(inst, cfg.solver);
  else if (cfg.command == Command::minimax)
    r = minimize_max(inst, cfg.solver);
  else
    r = maximize_min(inst, cfg.solver);
  const SolverOptions& s = cfg.solver;
  return {{"kind", "solve"},
          {"command", std::string(to_string(cfg.command))},
          {"nodes", nodes_to_json(r.nodes)},
          {"value", ext_to_json(r.value)},
          {"residual", real_to_json(r.residual)},
          {"status", std::string(to_string(r.status))},
          {"evaluations", r.evaluations},
          {"method", r.method},
          {"diagnostic", r.diagnostic},
          {"rejected_steps", r.rejected_steps},
          {"options",
           {{"residual_tol", s.residual_tol},
            {"max_sweeps", s.max_sweeps},
            {"multistart", s.multistart},
            {"direct_search_budget", s.direct_search_budget},
            {"argmax_tol", s.argmax_tol},
            {"rng_seed", s.rng_seed}}}};
}

json compare_payload(const ExperimentConfig& cfg) {
  const MaximaVector mx = interval_maxima(*cfg.instance, *cfg.x, cfg.argmax_tol);
  const MaximaVector my = interval_maxima(*cfg.instance, *cfg.y, cfg.argmax_tol);
  const Comparison c = compare_vectors(mx, my, cfg.value_tol);
  json mxj = json::array(), myj = json::array(), margins = json::array();
  for (std::size_t j = 0; j < mx.size(); ++j) {
    mxj.push_back(ext_to_json(mx.m[j]));
    myj.push_back(ext_to_json(my.m[j]));
    margins.push_back(real_to_json(c.margins[j]));
  }
  auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
  return {{"kind", "compare"},
          {"x", nodes_to_json(*cfg.x)},
          {"y", nodes_to_json(*cfg.y)},
          {"m_x", std::move(mxj)},
          {"m_y", std::move(myj)},
          {"margins", std::move(margins)},
          {"relation", std::string(to_string(c.relation))},
          {"witness_up", opt(c.witness_up)},
          {"witness_down", opt(c.witness_down)},
          {"value_tol", cfg.value_tol}};
}

std::vector<json> search_payloads(const ExperimentConfig& cfg) {
  const SearchReport rep = search_majorization(*cfg.instance, cfg.search);
  std::vector<json> out;
  for (const PairRecord& r : rep.records) {
    out.push_back({{"kind", "search_pair"},
                   {"worker", r.worker},
                   {"index", r.index},
                   {"x", nodes_to_json(r.x)},
                   {"y", nodes_to_json(r.y)},
                   {"margin", real_to_json(r.margin)},
                   {"improved", r.improved},
                   {"regular", r.regular}});
  }
  const SearchOptions& s = cfg.search;
  auto opt_nodes = [](const std::optional<NodeSystem>& y) { return y ? nodes_to_json(*y) : json(nullptr); };
  out.push_back({{"kind", "search_summary"},
                 {"verdict", std::string(to_string(rep.verdict))},
                 {"pairs_evaluated", rep.pairs_evaluated},
                 {"best_margin", real_to_json(rep.best_margin)},
                 {"best_x", opt_nodes(rep.best_x)},
                 {"best_y", opt_nodes(rep.best_y)},
                 {"best_pair_regular", rep.best_pair_regular},
                 {"instance_in_hypothesis", rep.instance_in_hypothesis},
                 {"out_of_hypothesis", rep.out_of_hypothesis},
                 {"reverified_margin", rep.reverified_margin ? real_to_json(*rep.reverified_margin) : json(nullptr)},
                 {"budget", s.budget},
                 {"seed", s.seed},
                 {"strategy", std::string(to_string(s.strategy))},
                 {"mode", std::string(to_string(s.mode))},
                 {"workers", s.workers},
                 {"value_tol", s.value_tol},
                 {"admit_nonregular", s.admit_nonregular}});
  return out;
}

json lemma_payload(const ExperimentConfig& cfg) {
  const Kernel k = cfg.kernel ? *cfg.kernel : cfg.instance->kernel();
  const WideningParams& w = cfg.widening;
  json parts = json::array();
  bool all = true;
  for (WideningPart part : cfg.parts) {
    json row{{"part", std::string(to_string(part))}};
    try {
      const ViolationReport r = check_widening_part(k, w, part, cfg.grid);
      row["samples"] = r.samples;
      row["violations"] = r.violations;
      row["worst_violation"] = real_to_json(r.worst_violation);
      row["strict_required"] = r.strict_required;
      row["strict_failures"] = r.strict_failures;
      row["midpoint_margin"] = real_to_json(r.midpoint_margin);
      row["ok"] = r.ok();
      all = all && r.ok();
    } catch (const HypothesisError& e) {
      row["skipped"] = e.what();
    }
    parts.push_back(std::move(row));
  }
  return {{"kind", "lemma_check"},
          {"kernel", kernel_to_json(k)},
          {"params", {{"p", w.p}, {"q", w.q}, {"alpha", w.alpha}, {"a", w.a}, {"b", w.b}, {"beta", w.beta}}},
          {"kappa", kappa(w)},
          {"grid", cfg.grid},
          {"parts", std::move(parts)},
          {"ok", all}};
}

}  // namespace

RunOutcome run(const ExperimentConfig& cfg, const RunSettings& settings) {
  ResultRecord base;
  base.command = std::string(to_string(cfg.command));
  base.config_digest = config_digest(cfg);
  base.timestamp = record_timestamp(settings.wallclock);
  base.rng_seed = cfg.seed;

  std::vector<json> payloads;
  RunOutcome out;
  switch (cfg.command) {
    case Command::eval: payloads.push_back(eval_payload(cfg)); break;
    case Command::maxima: payloads.push_back(maxima_payload(cfg)); break;
    case Command::equioscillate:
    case Command::minimax:
    case Command::maximin: payloads.push_back(solve_payload(cfg)); break;
    case Command::compare: payloads.push_back(compare_payload(cfg)); break;
    case Command::search: payloads = search_payloads(cfg); break;
    case Command::lemma_check: payloads.push_back(lemma_payload(cfg)); break;
    case Command::golden: {
      json p = golden_payload(run_golden_checks());
      out.golden_mismatch = !p["pass"].get<bool>();
      payloads.push_back(std::move(p));
      break;
    }
  }
  for (auto& p : payloads) {
    ResultRecord r = base;
    r.payload = std::move(p);
    out.records.push_back(std::move(r));
  }
  return out;
}

void write_jsonl(std::ostream& out, const std::vector<ResultRecord>& records) {
  for (const auto& r : records) out << to_jsonl_line(r) << '\n';
}

}  // namespace sot::harness
