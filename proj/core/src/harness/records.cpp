#include "sot/harness/records.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace sot::harness {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

void dump_into(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        dump_into(value, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_into(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v))
        out += format_double(v);
      else
        out += '"' + format_double(v) + '"';
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string canonical_dump(const json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

json ext_to_json(ExtReal v) { return v.is_neg_inf() ? json("-inf") : json(v.value()); }

ExtReal ext_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "-inf") return ExtReal::neg_inf();
  if (j.is_number()) return ExtReal::finite(j.get<double>());
  throw std::invalid_argument("expected a number or \"-inf\"");
}

json real_to_json(double v) { return std::isfinite(v) ? json(v) : json(format_double(v)); }

json nodes_to_json(const NodeSystem& y) { return std::vector<double>(y.values().begin(), y.values().end()); }

std::string config_digest(const ExperimentConfig& cfg) {
  json j = config_to_json(cfg);
  j.erase("seed");
  j.erase("output");
  const std::string text = canonical_dump(j);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xf];
  }
  return hex;
}

std::string record_timestamp(bool wallclock) {
  std::time_t t = 0;
  if (wallclock) {
    t = std::time(nullptr);
  } else if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string to_jsonl_line(const ResultRecord& r) {
  std::string out = "{\"schema_version\":" + std::to_string(r.schema_version);
  out += ",\"command\":" + json(r.command).dump();
  out += ",\"config_digest\":" + json(r.config_digest).dump();
  out += ",\"timestamp\":" + json(r.timestamp).dump();
  out += ",\"rng_seed\":" + std::to_string(r.rng_seed);
  out += ",\"payload\":" + canonical_dump(r.payload);
  out += '}';
  return out;
}

ResultRecord record_from_json(const json& j) {
  ResultRecord r;
  r.schema_version = j.at("schema_version").get<int>();
  r.command = j.at("command").get<std::string>();
  r.config_digest = j.at("config_digest").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  r.payload = j.at("payload");
  return r;
}

std::vector<ResultRecord> parse_jsonl(const std::string& text) {
  std::vector<ResultRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(record_from_json(json::parse(line)));
  }
  return out;
}

}  // namespace sot::harness
