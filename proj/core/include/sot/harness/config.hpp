#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sot/intertwining.hpp"
#include "sot/lemma_oracle.hpp"
#include "sot/node_system.hpp"
#include "sot/problem_instance.hpp"
#include "sot/solvers.hpp"

namespace sot::harness {

enum class Command { eval, maxima, equioscillate, minimax, maximin, compare, search, lemma_check, golden };
std::string_view to_string(Command c);
Command command_from_string(std::string_view s);

/// Parse or validation failure. `path` names the offending field
/// ("instance.weights[1]"); `line` is set for syntax errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message, int line = 0);

  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }

 private:
  std::string path_;
  int line_;
};

struct ExperimentConfig {
  Command command = Command::golden;
  std::optional<ProblemInstance> instance;
  /// lemma-check may name a kernel without a full instance.
  std::optional<Kernel> kernel;

  std::optional<NodeSystem> nodes;  // eval, maxima
  std::vector<double> points;       // eval
  std::optional<NodeSystem> x;      // compare
  std::optional<NodeSystem> y;

  double argmax_tol = kDefaultArgmaxTol;
  double value_tol = 1e-9;
  SolverOptions solver;
  SearchOptions search;  // search.seed mirrors `seed`

  WideningParams widening{1.0, 1.0, 0.1, 0.2, 0.6, 0.7};
  std::vector<WideningPart> parts{WideningPart::a, WideningPart::b, WideningPart::c, WideningPart::e};
  int grid = 1000;

  std::uint64_t seed = 0;
  std::string output_path;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig config_from_json(const nlohmann::json& j);

/// Full canonical form: every option is written out, defaults included.
nlohmann::json config_to_json(const ExperimentConfig& cfg);
std::string serialize_config(const ExperimentConfig& cfg);

/// Overrides the seed everywhere it is consumed.
void set_seed(ExperimentConfig& cfg, std::uint64_t seed);

nlohmann::json kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace sot::harness
