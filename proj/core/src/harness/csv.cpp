#include "sot/harness/csv.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sot::harness {

using nlohmann::json;

namespace {

const std::map<std::string, std::vector<std::string>, std::less<>>& column_table() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> table{
      {"eval", {"t", "F", "f"}},
      {"maxima", {"j", "m", "argmax"}},
      {"solve", {"command", "method", "status", "value", "residual", "evaluations", "nodes"}},
      {"compare", {"j", "m_x", "m_y", "margin"}},
      {"search_pair", {"worker", "index", "margin", "improved", "regular", "x", "y"}},
      {"search_summary",
       {"verdict", "pairs_evaluated", "best_margin", "best_x", "best_y", "reverified_margin", "out_of_hypothesis"}},
      {"lemma_check",
       {"part", "samples", "violations", "worst_violation", "strict_required", "strict_failures", "midpoint_margin",
        "ok"}},
      {"golden", {"name", "expected", "actual", "tolerance", "pass"}},
  };
  return table;
}

std::string cell(const json& v) {
  switch (v.type()) {
    case json::value_t::null: return "";
    case json::value_t::boolean: return v.get<bool>() ? "true" : "false";
    case json::value_t::number_float: return format_double(v.get<double>());
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: return v.dump();
    case json::value_t::string: return v.get<std::string>();
    case json::value_t::array: {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += cell(v[i]);
      }
      return out;
    }
    default: return canonical_dump(v);
  }
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<json> rows_of(const json& payload, const std::string& kind) {
  std::vector<json> rows;
  auto zip = [&](std::initializer_list<std::pair<const char*, const char*>> cols) {
    const std::size_t len = payload.at(cols.begin()->second).size();
    for (std::size_t j = 0; j < len; ++j) {
      json row{{"j", j}};
      for (const auto& [name, key] : cols) row[name] = payload.at(key).at(j);
      rows.push_back(std::move(row));
    }
  };
  if (kind == "maxima") {
    zip({{"m", "m"}, {"argmax", "argmax"}});
  } else if (kind == "compare") {
    zip({{"m_x", "m_x"}, {"m_y", "m_y"}, {"margin", "margins"}});
  } else if (kind == "eval") {
    for (const auto& p : payload.at("points")) rows.push_back(p);
  } else if (kind == "lemma_check") {
    for (const auto& p : payload.at("parts")) rows.push_back(p);
  } else if (kind == "golden") {
    for (const auto& p : payload.at("checks")) rows.push_back(p);
  } else {
    rows.push_back(payload);
  }
  return rows;
}

}  // namespace

std::vector<std::string> default_columns(std::string_view kind) {
  const auto& table = column_table();
  const auto it = table.find(kind);
  if (it == table.end()) throw std::invalid_argument("no CSV form for payload kind '" + std::string(kind) + "'");
  return it->second;
}

std::string emit_csv(const std::vector<ResultRecord>& records, std::vector<std::string> columns) {
  std::string kind;
  for (const auto& r : records) {
    const std::string k = r.payload.value("kind", "");
    if (kind.empty()) kind = k;
    if (k != kind) throw std::invalid_argument("heterogeneous records: '" + kind + "' and '" + k + "'");
  }
  if (!kind.empty()) {
    const auto known = default_columns(kind);
    if (columns.empty()) columns = known;
    for (const auto& c : columns) {
      if (std::find(known.begin(), known.end(), c) == known.end())
        throw std::invalid_argument("unknown column '" + c + "' for payload kind '" + kind + "'");
    }
  }

  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + quote(columns[i]);
  out += '\n';
  for (const auto& r : records) {
    for (const auto& row : rows_of(r.payload, kind)) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        const auto it = row.find(columns[i]);
        out += (i ? "," : "") + quote(it == row.end() ? std::string() : cell(*it));
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace sot::harness
