#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sot/harness/records.hpp"

namespace sot::harness {

/// Column set for a payload kind ("maxima" -> j,m,argmax). Throws
/// std::invalid_argument for kinds without a flat form.
std::vector<std::string> default_columns(std::string_view kind);

/// Flat CSV of homogeneous records. With no columns given, the kind's
/// default columns are used; an empty record list yields the header only.
/// Throws std::invalid_argument for mixed kinds or unknown columns.
std::string emit_csv(const std::vector<ResultRecord>& records, std::vector<std::string> columns = {});

}  // namespace sot::harness
