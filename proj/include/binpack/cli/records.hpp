#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "binpack/core_combinatorics.hpp"

namespace binpack::cli {

/// One computed value as printed by `count`.
struct ResultRecord {
  std::string quantity;
  /// Named parameters in the order they appear on the command line.
  std::vector<std::pair<std::string, std::int64_t>> params;
  Count value;
  std::string method;  // closed_form | pie | recurrence | oracle
};

nlohmann::ordered_json to_json(const ResultRecord& record);

/// Inverse of to_json; the value is parsed back from its decimal string.
ResultRecord record_from_json(const nlohmann::ordered_json& json);

}  // namespace binpack::cli
