#include "sot/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "sot/harness/records.hpp"

namespace sot::harness {

using nlohmann::json;

namespace {

constexpr std::pair<Command, std::string_view> kCommandNames[] = {
    {Command::eval, "eval"},
    {Command::maxima, "maxima"},
    {Command::equioscillate, "equioscillate"},
    {Command::minimax, "minimax"},
    {Command::maximin, "maximin"},
    {Command::compare, "compare"},
    {Command::search, "search"},
    {Command::lemma_check, "lemma-check"},
    {Command::golden, "golden"},
};

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError(join(path, key), "unknown field");
  }
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  return j;
}

double get_real(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "expected a finite number");
  return v;
}

ExtReal get_ext(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "-inf") return ExtReal::neg_inf();
    throw ConfigError(path, "expected a number or \"-inf\"");
  }
  return ExtReal::finite(get_real(j, path));
}

std::vector<double> get_reals(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_real(j[i], index(path, i)));
  return out;
}

bool get_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ConfigError(path, "expected true or false");
  return j.get<bool>();
}

long get_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<long>() < 0))
    throw ConfigError(path, "expected a nonnegative integer");
  return j.get<long>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

double get_positive(const json& j, const std::string& path) {
  const double v = get_real(j, path);
  if (!(v > 0.0)) throw ConfigError(path, "must be positive");
  return v;
}

NodeSystem get_nodes(const json& j, const std::string& path) {
  try {
    return NodeSystem(get_reals(j, path));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

FieldPiece piece_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  if (!j.contains("type")) throw ConfigError(join(path, "type"), "missing piece type");
  const std::string type = get_string(j["type"], join(path, "type"));
  auto num = [&](const char* key) {
    if (!j.contains(key)) throw ConfigError(join(path, key), "missing coefficient");
    return get_real(j[key], join(path, key));
  };
  if (type == "neg_inf") {
    reject_unknown(j, path, {"type"});
    return NegInfPiece{};
  }
  if (type == "constant") {
    reject_unknown(j, path, {"type", "c"});
    return ConstantPiece{num("c")};
  }
  if (type == "affine") {
    reject_unknown(j, path, {"type", "slope", "intercept"});
    return AffinePiece{num("slope"), num("intercept")};
  }
  if (type == "quadratic") {
    reject_unknown(j, path, {"type", "a", "b", "c"});
    return QuadraticPiece{num("a"), num("b"), num("c")};
  }
  throw ConfigError(join(path, "type"), "unknown piece type '" + type + "'");
}

json piece_to_json(const FieldPiece& p) {
  return std::visit(
      [](const auto& piece) -> json {
        using T = std::decay_t<decltype(piece)>;
        if constexpr (std::is_same_v<T, NegInfPiece>)
          return {{"type", "neg_inf"}};
        else if constexpr (std::is_same_v<T, ConstantPiece>)
          return {{"type", "constant"}, {"c", piece.c}};
        else if constexpr (std::is_same_v<T, AffinePiece>)
          return {{"type", "affine"}, {"slope", piece.slope}, {"intercept", piece.intercept}};
        else
          return {{"type", "quadratic"}, {"a", piece.a}, {"b", piece.b}, {"c", piece.c}};
      },
      p);
}

// The constructor repairs usc violations silently; a config must not rely
// on that unless it opts out explicitly.
void check_declared_usc(const std::vector<double>& bp, const std::vector<FieldPiece>& pieces,
                        const std::vector<ExtReal>& values, const std::string& path) {
  for (std::size_t k = 0; k < bp.size(); ++k) {
    double limit = -std::numeric_limits<double>::infinity();
    if (k > 0) limit = std::max(limit, piece_value(pieces[k - 1], bp[k]));
    if (k + 1 < bp.size()) limit = std::max(limit, piece_value(pieces[k], bp[k]));
    if (values[k].raw() < limit)
      throw ConfigError(index(path, k), "field is not upper semicontinuous at t=" + format_double(bp[k]) +
                                            "; set non_usc_override to explore such fields");
  }
}

FieldFunction field_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"breakpoints", "pieces", "point_values", "translates", "non_usc_override"});
  std::vector<double> bp{0.0, 1.0};
  if (j.contains("breakpoints")) bp = get_reals(j["breakpoints"], join(path, "breakpoints"));

  std::vector<FieldPiece> pieces;
  if (j.contains("pieces")) {
    const json& arr = j["pieces"];
    if (!arr.is_array()) throw ConfigError(join(path, "pieces"), "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) pieces.push_back(piece_from_json(arr[i], index(join(path, "pieces"), i)));
  } else {
    pieces.assign(bp.size() > 0 ? bp.size() - 1 : 0, ConstantPiece{0.0});
  }
  if (bp.size() < 2 || pieces.size() + 1 != bp.size())
    throw ConfigError(join(path, "pieces"), "need one piece per interval between breakpoints");

  const bool override_usc = j.contains("non_usc_override") && get_bool(j["non_usc_override"], join(path, "non_usc_override"));

  std::vector<ExtReal> values;
  if (j.contains("point_values")) {
    const json& arr = j["point_values"];
    const std::string vpath = join(path, "point_values");
    if (!arr.is_array() || arr.size() != bp.size())
      throw ConfigError(vpath, "need one point value per breakpoint");
    for (std::size_t i = 0; i < arr.size(); ++i) values.push_back(get_ext(arr[i], index(vpath, i)));
    if (!override_usc) check_declared_usc(bp, pieces, values, vpath);
  }

  std::vector<Translate> translates;
  if (j.contains("translates")) {
    const json& arr = j["translates"];
    const std::string tpath = join(path, "translates");
    if (!arr.is_array()) throw ConfigError(tpath, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = index(tpath, i);
      require_object(arr[i], p);
      reject_unknown(arr[i], p, {"weight", "center", "kernel"});
      if (!arr[i].contains("weight") || !arr[i].contains("center"))
        throw ConfigError(p, "translate needs weight and center");
      Translate tr;
      tr.weight = get_positive(arr[i]["weight"], join(p, "weight"));
      tr.center = get_real(arr[i]["center"], join(p, "center"));
      tr.kernel = arr[i].contains("kernel") ? kernel_from_json(arr[i]["kernel"], join(p, "kernel")) : Kernel::log();
      translates.push_back(tr);
    }
  }
  try {
    return FieldFunction(std::move(bp), std::move(pieces), std::move(values), std::move(translates), override_usc);
  } catch (const std::exception& e) {
    throw ConfigError(path, e.what());
  }
}

json field_to_json(const FieldFunction& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces()) pieces.push_back(piece_to_json(p));
  json values = json::array();
  for (ExtReal v : f.point_values()) values.push_back(ext_to_json(v));
  json translates = json::array();
  for (const auto& tr : f.translates())
    translates.push_back({{"weight", tr.weight}, {"center", tr.center}, {"kernel", kernel_to_json(tr.kernel)}});
  return {{"breakpoints", f.breakpoints()},
          {"pieces", std::move(pieces)},
          {"point_values", std::move(values)},
          {"translates", std::move(translates)},
          {"non_usc_override", f.non_usc_override()}};
}

ProblemInstance instance_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"n", "weights", "kernel", "field"});
  if (!j.contains("weights")) throw ConfigError(join(path, "weights"), "missing weights");
  const std::string wpath = join(path, "weights");
  std::vector<double> w = get_reals(j["weights"], wpath);
  if (w.empty()) throw ConfigError(wpath, "need at least one weight");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0)) throw ConfigError(index(wpath, i), "weights must be positive");
  }
  if (j.contains("n") && get_count(j["n"], join(path, "n")) != static_cast<long>(w.size()))
    throw ConfigError(join(path, "n"), "n does not match the number of weights");
  if (!j.contains("kernel")) throw ConfigError(join(path, "kernel"), "missing kernel");
  Kernel k = kernel_from_json(j["kernel"], join(path, "kernel"));
  FieldFunction field = j.contains("field") ? field_from_json(j["field"], join(path, "field")) : FieldFunction::constant(0.0);

  const NFieldReport rep = validate_n_field(field, static_cast<int>(w.size()));
  if (!rep.valid)
    throw ConfigError(join(path, "field"), "field is finite on too few points for n=" + std::to_string(w.size()) +
                                               " (weighted count " + format_double(rep.weighted_count) + ")");
  try {
    return ProblemInstance(std::move(w), k, std::move(field));
  } catch (const std::exception& e) {
    throw ConfigError(path, e.what());
  }
}

json instance_to_json(const ProblemInstance& inst) {
  return {{"n", inst.n()},
          {"weights", inst.weights()},
          {"kernel", kernel_to_json(inst.kernel())},
          {"field", field_to_json(inst.field())}};
}

void read_solver(const json& j, const std::string& path, SolverOptions& s) {
  require_object(j, path);
  reject_unknown(j, path, {"residual_tol", "max_sweeps", "multistart", "direct_search_budget"});
  if (j.contains("residual_tol")) s.residual_tol = get_positive(j["residual_tol"], join(path, "residual_tol"));
  if (j.contains("max_sweeps")) s.max_sweeps = static_cast<int>(get_count(j["max_sweeps"], join(path, "max_sweeps")));
  if (j.contains("multistart")) s.multistart = static_cast<int>(get_count(j["multistart"], join(path, "multistart")));
  if (j.contains("direct_search_budget"))
    s.direct_search_budget = get_count(j["direct_search_budget"], join(path, "direct_search_budget"));
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

void read_search(const json& j, const std::string& path, SearchOptions& s) {
  require_object(j, path);
  reject_unknown(j, path, {"budget", "strategy", "mode", "admit_nonregular", "workers", "trace_all", "initial_step",
                           "min_step", "seed_pairs"});
  if (j.contains("budget")) s.budget = get_count(j["budget"], join(path, "budget"));
  try {
    if (j.contains("strategy")) s.strategy = search_strategy_from_string(get_string(j["strategy"], join(path, "strategy")));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(join(path, "strategy"), e.what());
  }
  try {
    if (j.contains("mode")) s.mode = majorization_mode_from_string(get_string(j["mode"], join(path, "mode")));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(join(path, "mode"), e.what());
  }
  if (j.contains("admit_nonregular")) s.admit_nonregular = get_bool(j["admit_nonregular"], join(path, "admit_nonregular"));
  if (j.contains("workers")) {
    s.workers = static_cast<int>(get_count(j["workers"], join(path, "workers")));
    if (s.workers < 1) throw ConfigError(join(path, "workers"), "need at least one worker");
  }
  if (j.contains("trace_all")) s.trace_all = get_bool(j["trace_all"], join(path, "trace_all"));
  if (j.contains("initial_step")) s.initial_step = get_positive(j["initial_step"], join(path, "initial_step"));
  if (j.contains("min_step")) s.min_step = get_positive(j["min_step"], join(path, "min_step"));
  if (j.contains("seed_pairs")) {
    const json& arr = j["seed_pairs"];
    const std::string p = join(path, "seed_pairs");
    if (!arr.is_array()) throw ConfigError(p, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string pi = index(p, i);
      require_object(arr[i], pi);
      reject_unknown(arr[i], pi, {"x", "y"});
      if (!arr[i].contains("x") || !arr[i].contains("y")) throw ConfigError(pi, "seed pair needs x and y");
      s.seed_pairs.emplace_back(get_nodes(arr[i]["x"], join(pi, "x")), get_nodes(arr[i]["y"], join(pi, "y")));
    }
  }
}

void read_widening(const json& j, const std::string& path, WideningParams& w) {
  require_object(j, path);
  reject_unknown(j, path, {"p", "q", "alpha", "a", "b", "beta"});
  auto rd = [&](const char* key, double& out) {
    if (j.contains(key)) out = get_real(j[key], join(path, key));
  };
  rd("p", w.p);
  rd("q", w.q);
  rd("alpha", w.alpha);
  rd("a", w.a);
  rd("b", w.b);
  rd("beta", w.beta);
  try {
    w.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

void require_nodes_match(const std::optional<NodeSystem>& y, const ExperimentConfig& cfg, const std::string& path) {
  if (!y) throw ConfigError(path, "required by command '" + std::string(to_string(cfg.command)) + "'");
  if (cfg.instance && static_cast<int>(y->size()) != cfg.instance->n())
    throw ConfigError(path, "expected " + std::to_string(cfg.instance->n()) + " nodes");
}

void check_command_inputs(const ExperimentConfig& cfg) {
  const std::string cmd(to_string(cfg.command));
  auto need_instance = [&] {
    if (!cfg.instance) throw ConfigError("instance", "required by command '" + cmd + "'");
  };
  switch (cfg.command) {
    case Command::eval:
      need_instance();
      require_nodes_match(cfg.nodes, cfg, "nodes");
      if (cfg.points.empty()) throw ConfigError("points", "required by command 'eval'");
      for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        if (cfg.points[i] < 0.0 || cfg.points[i] > 1.0) throw ConfigError(index("points", i), "must lie in [0, 1]");
      }
      break;
    case Command::maxima:
      need_instance();
      require_nodes_match(cfg.nodes, cfg, "nodes");
      break;
    case Command::compare:
      need_instance();
      require_nodes_match(cfg.x, cfg, "x");
      require_nodes_match(cfg.y, cfg, "y");
      break;
    case Command::search:
      need_instance();
      for (std::size_t i = 0; i < cfg.search.seed_pairs.size(); ++i) {
        const auto& [x, y] = cfg.search.seed_pairs[i];
        if (static_cast<int>(x.size()) != cfg.instance->n() || static_cast<int>(y.size()) != cfg.instance->n())
          throw ConfigError(index("options.search.seed_pairs", i), "node count differs from n");
      }
      break;
    case Command::equioscillate:
    case Command::minimax:
    case Command::maximin:
      need_instance();
      break;
    case Command::lemma_check:
      if (!cfg.kernel && !cfg.instance) throw ConfigError("kernel", "lemma-check needs a kernel or an instance");
      break;
    case Command::golden:
      break;
  }
}

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : kCommandNames) {
    if (cmd == c) return name;
  }
  return "?";
}

Command command_from_string(std::string_view s) {
  for (const auto& [cmd, name] : kCommandNames) {
    if (name == s) return cmd;
  }
  throw std::invalid_argument("unknown command '" + std::string(s) + "'");
}

ConfigError::ConfigError(std::string path, const std::string& message, int line)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         (path.empty() ? std::string() : path + ": ") + message),
      path_(std::move(path)),
      line_(line) {}

json kernel_to_json(const Kernel& k) {
  json j{{"family", std::string(to_string(k.family()))}};
  switch (k.family()) {
    case KernelFamily::log: break;
    case KernelFamily::log_shifted: j["params"] = {{"eps", k.parameter()}}; break;
    case KernelFamily::power: j["params"] = {{"alpha", k.parameter()}}; break;
    case KernelFamily::neg_parabola_nonmonotone: j["params"] = {{"c", k.parameter()}}; break;
  }
  if (k.reflected()) j["reflected"] = true;
  return j;
}

Kernel kernel_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"family", "params", "reflected"});
  if (!j.contains("family")) throw ConfigError(join(path, "family"), "missing kernel family");
  const std::string name = get_string(j["family"], join(path, "family"));
  KernelFamily fam;
  try {
    fam = kernel_family_from_string(name);
  } catch (const std::invalid_argument&) {
    throw ConfigError(join(path, "family"), "unknown kernel family '" + name + "'");
  }
  const std::string ppath = join(path, "params");
  const json params = j.contains("params") ? j["params"] : json::object();
  require_object(params, ppath);
  auto param = [&](const char* key) {
    reject_unknown(params, ppath, {key});
    if (!params.contains(key)) throw ConfigError(join(ppath, key), "missing kernel parameter");
    return get_real(params[key], join(ppath, key));
  };
  Kernel k = Kernel::log();
  try {
    switch (fam) {
      case KernelFamily::log:
        reject_unknown(params, ppath, {});
        break;
      case KernelFamily::log_shifted: k = Kernel::log_shifted(param("eps")); break;
      case KernelFamily::power: k = Kernel::power(param("alpha")); break;
      case KernelFamily::neg_parabola_nonmonotone: k = Kernel::neg_parabola(param("c")); break;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(ppath, e.what());
  }
  if (j.contains("reflected") && get_bool(j["reflected"], join(path, "reflected"))) k = k.reflect();
  return k;
}

ExperimentConfig config_from_json(const json& j) {
  require_object(j, "");
  reject_unknown(j, "", {"command", "instance", "kernel", "nodes", "points", "x", "y", "options", "seed", "output"});
  ExperimentConfig cfg;
  if (!j.contains("command")) throw ConfigError("command", "missing command");
  try {
    cfg.command = command_from_string(get_string(j["command"], "command"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("command", e.what());
  }
  if (j.contains("instance")) cfg.instance = instance_from_json(j["instance"], "instance");
  if (j.contains("kernel")) cfg.kernel = kernel_from_json(j["kernel"], "kernel");
  if (j.contains("nodes")) cfg.nodes = get_nodes(j["nodes"], "nodes");
  if (j.contains("points")) cfg.points = get_reals(j["points"], "points");
  if (j.contains("x")) cfg.x = get_nodes(j["x"], "x");
  if (j.contains("y")) cfg.y = get_nodes(j["y"], "y");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ConfigError("seed", "expected a nonnegative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("output")) cfg.output_path = get_string(j["output"], "output");

  if (j.contains("options")) {
    const json& o = require_object(j["options"], "options");
    reject_unknown(o, "options", {"argmax_tol", "value_tol", "solver", "search", "widening", "parts", "grid"});
    if (o.contains("argmax_tol")) cfg.argmax_tol = get_positive(o["argmax_tol"], "options.argmax_tol");
    if (o.contains("value_tol")) {
      cfg.value_tol = get_real(o["value_tol"], "options.value_tol");
      if (cfg.value_tol < 0.0) throw ConfigError("options.value_tol", "must be >= 0");
    }
    if (o.contains("solver")) read_solver(o["solver"], "options.solver", cfg.solver);
    if (o.contains("search")) read_search(o["search"], "options.search", cfg.search);
    if (o.contains("widening")) read_widening(o["widening"], "options.widening", cfg.widening);
    if (o.contains("parts")) {
      const json& arr = o["parts"];
      if (!arr.is_array()) throw ConfigError("options.parts", "expected an array");
      cfg.parts.clear();
      for (std::size_t i = 0; i < arr.size(); ++i) {
        try {
          cfg.parts.push_back(widening_part_from_string(get_string(arr[i], index("options.parts", i))));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(index("options.parts", i), e.what());
        }
      }
    }
    if (o.contains("grid")) {
      cfg.grid = static_cast<int>(get_count(o["grid"], "options.grid"));
      if (cfg.grid < 2) throw ConfigError("options.grid", "need at least 2 grid points");
    }
  }
  cfg.solver.argmax_tol = cfg.argmax_tol;
  cfg.search.argmax_tol = cfg.argmax_tol;
  cfg.search.value_tol = cfg.value_tol;
  set_seed(cfg, cfg.seed);
  check_command_inputs(cfg);
  return cfg;
}

ExperimentConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("", e.what(), line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  return config_from_json(j);
}

void set_seed(ExperimentConfig& cfg, std::uint64_t seed) {
  cfg.seed = seed;
  cfg.solver.rng_seed = seed;
  cfg.search.seed = seed;
}

json config_to_json(const ExperimentConfig& cfg) {
  json j{{"command", std::string(to_string(cfg.command))}, {"seed", cfg.seed}};
  if (cfg.instance) j["instance"] = instance_to_json(*cfg.instance);
  if (cfg.kernel) j["kernel"] = kernel_to_json(*cfg.kernel);
  auto nodes = [](const NodeSystem& y) { return std::vector<double>(y.values().begin(), y.values().end()); };
  if (cfg.nodes) j["nodes"] = nodes(*cfg.nodes);
  if (!cfg.points.empty()) j["points"] = cfg.points;
  if (cfg.x) j["x"] = nodes(*cfg.x);
  if (cfg.y) j["y"] = nodes(*cfg.y);
  if (!cfg.output_path.empty()) j["output"] = cfg.output_path;

  const SolverOptions& s = cfg.solver;
  const SearchOptions& q = cfg.search;
  json pairs = json::array();
  for (const auto& [x, y] : q.seed_pairs) pairs.push_back({{"x", nodes(x)}, {"y", nodes(y)}});
  json parts = json::array();
  for (WideningPart p : cfg.parts) parts.push_back(std::string(to_string(p)));
  j["options"] = {
      {"argmax_tol", cfg.argmax_tol},
      {"value_tol", cfg.value_tol},
      {"solver",
       {{"residual_tol", s.residual_tol},
        {"max_sweeps", s.max_sweeps},
        {"multistart", s.multistart},
        {"direct_search_budget", s.direct_search_budget}}},
      {"search",
       {{"budget", q.budget},
        {"strategy", std::string(to_string(q.strategy))},
        {"mode", std::string(to_string(q.mode))},
        {"admit_nonregular", q.admit_nonregular},
        {"workers", q.workers},
        {"trace_all", q.trace_all},
        {"initial_step", q.initial_step},
        {"min_step", q.min_step},
        {"seed_pairs", std::move(pairs)}}},
      {"widening",
       {{"p", cfg.widening.p},
        {"q", cfg.widening.q},
        {"alpha", cfg.widening.alpha},
        {"a", cfg.widening.a},
        {"b", cfg.widening.b},
        {"beta", cfg.widening.beta}}},
      {"parts", std::move(parts)},
      {"grid", cfg.grid},
  };
  return j;
}

std::string serialize_config(const ExperimentConfig& cfg) { return canonical_dump(config_to_json(cfg)); }

}  // namespace sot::harness
