#include "binpack/cli/records.hpp"

namespace binpack::cli {

nlohmann::ordered_json to_json(const ResultRecord& record) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : record.params) {
    params[name] = value;
  }
  // Counts leave the process as strings; they outgrow 2^53 almost at once.
  return {{"quantity", record.quantity},
          {"params", params},
          {"value", to_string(record.value)},
          {"method", record.method}};
}

ResultRecord record_from_json(const nlohmann::ordered_json& json) {
  ResultRecord record;
  record.quantity = json.at("quantity").get<std::string>();
  for (const auto& [name, value] : json.at("params").items()) {
    record.params.emplace_back(name, value.get<std::int64_t>());
  }
  record.value = Count(json.at("value").get<std::string>());
  record.method = json.at("method").get<std::string>();
  return record;
}

}  // namespace binpack::cli
