#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sot/ext_real.hpp"
#include "sot/harness/config.hpp"
#include "sot/node_system.hpp"

namespace sot::harness {

inline constexpr int kSchemaVersion = 1;

struct ResultRecord {
  int schema_version = kSchemaVersion;
  std::string command;
  std::string config_digest;
  std::string timestamp;
  std::uint64_t rng_seed = 0;
  nlohmann::json payload;  // always carries a "kind" string

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Shortest decimal text that round-trips to the same double. Non-finite
/// values become the tokens "-inf", "inf", "nan".
std::string format_double(double v);

/// JSON text with sorted keys, no whitespace and format_double numbers.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json ext_to_json(ExtReal v);
ExtReal ext_from_json(const nlohmann::json& j);
/// Finite doubles stay numbers; non-finite ones become string tokens.
nlohmann::json real_to_json(double v);
nlohmann::json nodes_to_json(const NodeSystem& y);

/// Hex SHA-256 of the canonical config with seed and output path removed.
std::string config_digest(const ExperimentConfig& cfg);

/// "1970-01-01T00:00:00Z" unless SOURCE_DATE_EPOCH is set, or wall clock
/// time when requested. The default keeps repeated runs byte-identical.
std::string record_timestamp(bool wallclock = false);

std::string to_jsonl_line(const ResultRecord& r);
ResultRecord record_from_json(const nlohmann::json& j);
std::vector<ResultRecord> parse_jsonl(const std::string& text);

}  // namespace sot::harness
