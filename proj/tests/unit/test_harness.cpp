#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <algorithm>
#include <sstream>

#include "sot/harness/config.hpp"
#include "sot/harness/csv.hpp"
#include "sot/harness/golden.hpp"
#include "sot/harness/records.hpp"
#include "sot/harness/run.hpp"
#include "sot/random.hpp"

using namespace sot;
using namespace sot::harness;

namespace {

const char* kMinimal = R"({"command": "maxima",
  "instance": {"weights": [1], "kernel": {"family": "log"}},
  "nodes": [0.5]})";

const char* kGap = R"({
  "command": "compare",
  "instance": {
    "weights": [1],
    "kernel": {"family": "log"},
    "field": {"breakpoints": [0, 0.6666666666666666, 1],
              "pieces": [{"type": "neg_inf"}, {"type": "constant", "c": 0}],
              "point_values": ["-inf", 0, 0]}
  },
  "x": [0.3333333333333333],
  "y": [0.6666666666666666]
})";

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::string dump(const std::vector<ResultRecord>& records) {
  std::ostringstream out;
  write_jsonl(out, records);
  return out.str();
}

}  // namespace

TEST(Config, MinimalIsValid) {
  const auto cfg = parse_config(kMinimal);
  EXPECT_EQ(cfg.command, Command::maxima);
  ASSERT_TRUE(cfg.instance);
  EXPECT_EQ(cfg.instance->n(), 1);
  EXPECT_EQ(cfg.nodes, NodeSystem{0.5});
}

TEST(Config, GapFieldIsValid) {
  const auto cfg = parse_config(kGap);
  EXPECT_TRUE(cfg.instance->field()(0.5).is_neg_inf());
  EXPECT_EQ(cfg.instance->field()(0.8), ExtReal::finite(0.0));
}

TEST(Config, ZeroWeightNamesField) {
  const std::string err = error_of(R"({"command": "maxima",
    "instance": {"weights": [1, 0], "kernel": {"family": "log"}}, "nodes": [0.2, 0.4]})");
  EXPECT_NE(err.find("instance.weights[1]"), std::string::npos) << err;
  EXPECT_NE(err.find("weights must be positive"), std::string::npos) << err;
}

TEST(Config, UnknownKernelFamily) {
  const std::string err = error_of(R"({"command": "maxima",
    "instance": {"weights": [1], "kernel": {"family": "cosh"}}, "nodes": [0.5]})");
  EXPECT_NE(err.find("unknown kernel family 'cosh'"), std::string::npos) << err;
}

TEST(Config, RejectsUnknownKeysAndMissingInputs) {
  EXPECT_NE(error_of(R"({"command": "golden", "colour": 1})"), "");
  EXPECT_NE(error_of(R"({"command": "maxima", "instance": {"weights": [1], "kernel": {"family": "log"}}})"), "");
  EXPECT_NE(error_of(R"({"command": "maxima", "instance": {"weights": [1], "kernel": {"family": "log"}},
    "nodes": [0.2, 0.3]})"), "");
}

TEST(Config, SyntaxErrorReportsLine) {
  try {
    parse_config("{\n  \"command\": \"golden\",\n  \"seed\": ,\n}");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Config, RoundTrip) {
  auto cfg = parse_config(kGap);
  cfg.search.budget = 123;
  cfg.search.strategy = SearchStrategy::hill_climb;
  cfg.solver.multistart = 3;
  set_seed(cfg, 99);
  EXPECT_EQ(parse_config(serialize_config(cfg)), cfg);

  ExperimentConfig lemma;
  lemma.command = Command::lemma_check;
  lemma.kernel = Kernel::power(0.5);
  lemma.parts = {WideningPart::a, WideningPart::e};
  EXPECT_EQ(parse_config(serialize_config(lemma)), lemma);
}

TEST(Config, DigestIgnoresSeedAndOutput) {
  auto a = parse_config(kMinimal);
  auto b = a;
  set_seed(b, 1234);
  b.output_path = "elsewhere.jsonl";
  EXPECT_EQ(config_digest(a), config_digest(b));
  b.nodes = NodeSystem{0.25};
  EXPECT_NE(config_digest(a), config_digest(b));
  EXPECT_EQ(config_digest(a).size(), 64u);
}

TEST(Records, FormatDoubleRoundTrips) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::ldexp(rng.uniform(-1.0, 1.0), static_cast<int>(rng.below(200)) - 100);
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Records, JsonlRoundTrip) {
  const auto out = run(parse_config(kMinimal));
  ASSERT_EQ(out.records.size(), 1u);
  const auto back = parse_jsonl(dump(out.records));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].config_digest, out.records[0].config_digest);
  EXPECT_EQ(dump(back), dump(out.records));
  EXPECT_EQ(back[0].payload["m"][0].get<double>(), out.records[0].payload["m"][0].get<double>());
  const auto gap = run(parse_config(kGap)).records;
  EXPECT_EQ(parse_jsonl(dump(gap)).at(0).payload["m_x"][0], "-inf");
}

TEST(Csv, MaximaExample) {
  const auto out = run(parse_config(kMinimal));
  const std::string csv = emit_csv(out.records);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "j,m,argmax");
  // F(t) = ln|t - 1/2| peaks at both ends.
  EXPECT_EQ(csv, "j,m,argmax\n0,-0.6931471805599453,0\n1,-0.6931471805599453,1\n");
}

TEST(Csv, CompareRowsAndNegInfCells) {
  const auto out = run(parse_config(kGap));
  const std::string csv = emit_csv(out.records);
  EXPECT_EQ(csv.rfind("j,m_x,m_y,margin\n0,-inf,-inf,0\n1,", 0), 0u) << csv;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(Csv, EmptyAndHeterogeneous) {
  EXPECT_EQ(emit_csv({}, {"a", "b"}), "a,b\n");
  auto a = run(parse_config(kMinimal)).records;
  auto b = run(parse_config(kGap)).records;
  a.push_back(b[0]);
  EXPECT_THROW(emit_csv(a), std::invalid_argument);
  EXPECT_THROW(emit_csv(b, {"nope"}), std::invalid_argument);
}

TEST(Golden, AllChecksPass) {
  for (const auto& c : run_golden_checks()) EXPECT_TRUE(c.pass) << c.name << ": " << c.actual;
  ExperimentConfig cfg;
  EXPECT_FALSE(run(cfg).golden_mismatch);
}

TEST(Run, EquioscillateTwoNodes) {
  const auto out = run(parse_config(R"({"command": "equioscillate",
    "instance": {"weights": [1, 1], "kernel": {"family": "log"}}})"));
  const auto& p = out.records.at(0).payload;
  EXPECT_EQ(p["kind"], "solve");
  EXPECT_EQ(p["status"], "converged");
  const double c = (1.0 - std::sqrt(0.5)) / 2.0;
  EXPECT_NEAR(p["nodes"][0].get<double>(), c, 1e-6);
  EXPECT_NEAR(p["nodes"][1].get<double>(), 1.0 - c, 1e-6);
  EXPECT_NEAR(p["value"].get<double>(), -3.0 * std::log(2.0), 1e-6);
}

TEST(Run, SearchIsByteIdentical) {
  auto cfg = parse_config(R"({"command": "search",
    "instance": {"weights": [1, 1, 1], "kernel": {"family": "power", "params": {"alpha": 0.5}}},
    "seed": 8, "options": {"search": {"budget": 400, "workers": 2, "trace_all": true}}})");
  const std::string a = dump(run(cfg).records);
  const std::string b = dump(run(cfg).records);
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 401);
  set_seed(cfg, 9);
  EXPECT_NE(dump(run(cfg).records), a);
}

TEST(Run, LemmaCheckSkipsOutOfHypothesisParts) {
  auto cfg = parse_config(R"({"command": "lemma-check", "kernel": {"family": "neg_parabola", "params": {"c": 0.5}},
    "options": {"parts": ["a", "c"]}})");
  const auto out = run(cfg);
  const auto& p = out.records.at(0).payload;
  ASSERT_EQ(p["parts"].size(), 2u);
  EXPECT_TRUE(p["parts"][0].contains("skipped"));
  EXPECT_TRUE(p["parts"][1]["ok"].get<bool>());
}
