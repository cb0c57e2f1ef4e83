#pragma once

#include <iosfwd>
#include <vector>

#include "sot/harness/config.hpp"
#include "sot/harness/records.hpp"

namespace sot::harness {

struct RunOutcome {
  std::vector<ResultRecord> records;
  /// Only `golden` can fail; solver trouble is reported in the payload.
  bool golden_mismatch = false;
};

struct RunSettings {
  bool wallclock = false;
};

/// Executes the command. Throws ConfigError when the config lacks what the
/// command needs.
RunOutcome run(const ExperimentConfig& cfg, const RunSettings& settings = {});

void write_jsonl(std::ostream& out, const std::vector<ResultRecord>& records);

}  // namespace sot::harness
