#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace zsf {

/// A typed cell. Arbitrary-precision counts travel as decimal strings and
/// rationals as "numerator/denominator", so every consumer sees exact values.
using Value = std::variant<std::int64_t, double, bool, std::string>;

struct Row {
  std::vector<std::pair<std::string, Value>> fields;

  Row& set(std::string key, Value value);
  const Value* find(const std::string& key) const;

  bool operator==(const Row&) const = default;
};

/// Serialized result of one CLI command.
struct OutputRecord {
  std::string schema_version = "1";
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Row> rows;

  OutputRecord& param(std::string key, std::string value);
  const std::string* find_param(const std::string& key) const;

  nlohmann::ordered_json to_json() const;
  /// Throws nlohmann::json::exception / std::invalid_argument on malformed input.
  static OutputRecord from_json(const nlohmann::ordered_json& j);

  /// Header is the union of row keys in first-seen order; missing cells are
  /// left empty. Parameters are not part of the CSV form.
  std::string to_csv() const;

  bool operator==(const OutputRecord&) const = default;
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

std::string value_to_string(const Value& v);

}  // namespace zsf
