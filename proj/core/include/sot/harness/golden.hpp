#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace sot::harness {

struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;
  double tolerance = 0.0;
  bool pass = false;
};

/// Built-in worked examples: the majorizing one-node pair on a field that is
/// -inf left of 2/3, Chebyshev nodes for n = 1..3, and the kappa = 1
/// widening example.
std::vector<GoldenCheck> run_golden_checks();

nlohmann::json golden_payload(const std::vector<GoldenCheck>& checks);

}  // namespace sot::harness
