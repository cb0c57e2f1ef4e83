// sot: run one experiment from a JSON config and write JSONL records.
//
//   sot <command> --config <path> [--seed N] [--out <path>] [--csv <path>]
//
// SOT_SEED overrides the config seed; --seed overrides both.
// Exit codes: 0 ok, 1 I/O or config error, 2 golden mismatch.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sot/harness/config.hpp"
#include "sot/harness/csv.hpp"
#include "sot/harness/run.hpp"

namespace {

std::optional<std::uint64_t> parse_seed(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

int fail(const std::string& msg) {
  std::cerr << "sot: " << msg << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval maxima of sums of translates: experiment runner"};
  std::string command, config_path, out_path, csv_path;
  std::optional<std::uint64_t> seed;
  bool wallclock = false;
  app.add_option("command", command,
                 "eval, maxima, equioscillate, minimax, maximin, compare, search, lemma-check, golden")
      ->required();
  app.add_option("--config,-c", config_path, "JSON experiment config");
  app.add_option("--seed", seed, "RNG seed (overrides SOT_SEED and the config)");
  app.add_option("--out,-o", out_path, "JSONL output path (default: config output, else stdout)");
  app.add_option("--csv", csv_path, "also write the records as CSV");
  app.add_flag("--wallclock", wallclock, "stamp records with the current time");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  using namespace sot::harness;
  ExperimentConfig cfg;
  try {
    const Command cmd = command_from_string(command);
    if (config_path.empty()) {
      if (cmd != Command::golden) return fail("--config is required for '" + command + "'");
      cfg.command = cmd;
    } else {
      std::ifstream in(config_path);
      if (!in) return fail("cannot read " + config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      cfg = parse_config(buf.str());
      if (cfg.command != cmd)
        return fail("config command '" + std::string(to_string(cfg.command)) + "' does not match '" + command + "'");
    }
  } catch (const std::exception& e) {
    return fail(config_path.empty() ? e.what() : config_path + ": " + e.what());
  }

  if (const char* env = std::getenv("SOT_SEED")) {
    const auto s = parse_seed(env);
    if (!s) return fail("SOT_SEED is not a nonnegative integer");
    set_seed(cfg, *s);
  }
  if (seed) set_seed(cfg, *seed);
  if (!out_path.empty()) cfg.output_path = out_path;

  RunOutcome outcome;
  try {
    outcome = run(cfg, RunSettings{wallclock});
  } catch (const std::exception& e) {
    return fail(e.what());
  }

  if (cfg.output_path.empty() || cfg.output_path == "-") {
    write_jsonl(std::cout, outcome.records);
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) return fail("cannot write " + cfg.output_path);
    write_jsonl(out, outcome.records);
    if (!out) return fail("write failed: " + cfg.output_path);
  }

  if (!csv_path.empty()) {
    std::vector<ResultRecord> rows;
    const bool search = cfg.command == Command::search;
    for (const auto& r : outcome.records) {
      // A search emits pair records plus one summary; the CSV keeps the pairs.
      if (!search || r.payload.value("kind", "") == "search_pair") rows.push_back(r);
    }
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) return fail("cannot write " + csv_path);
    try {
      csv << (rows.empty() && search ? emit_csv(rows, default_columns("search_pair")) : emit_csv(rows));
    } catch (const std::exception& e) {
      return fail(e.what());
    }
  }

  if (outcome.golden_mismatch) {
    for (const auto& r : outcome.records) {
      for (const auto& c : r.payload.value("checks", nlohmann::json::array())) {
        if (!c.value("pass", false))
          std::cerr << "golden mismatch: " << c.value("name", "") << " expected " << c.value("expected", "")
                    << " got " << c.value("actual", "") << '\n';
      }
    }
    return 2;
  }
  return 0;
}
