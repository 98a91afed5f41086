#include "zsf/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace zsf {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Row& Row::set(std::string key, Value value) {
  for (auto& [k, v] : fields)
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

const Value* Row::find(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

OutputRecord& OutputRecord::param(std::string key, std::string value) {
  for (auto& [k, v] : parameters)
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  parameters.emplace_back(std::move(key), std::move(value));
  return *this;
}

const std::string* OutputRecord::find_param(const std::string& key) const {
  for (const auto& [k, v] : parameters)
    if (k == key) return &v;
  return nullptr;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string value_to_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>)
          return x;
        else if constexpr (std::is_same_v<T, bool>)
          return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, double>)
          return format_double(x);
        else
          return std::to_string(x);
      },
      v);
}

nlohmann::ordered_json OutputRecord::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) j["parameters"][k] = v;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (const auto& [k, v] : row.fields) std::visit([&](const auto& x) { r[k] = x; }, v);
    j["rows"].push_back(std::move(r));
  }
  return j;
}

OutputRecord OutputRecord::from_json(const nlohmann::ordered_json& j) {
  OutputRecord rec;
  rec.schema_version = j.at("schema_version").get<std::string>();
  rec.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) rec.parameters.emplace_back(k, v.get<std::string>());
  for (const auto& r : j.at("rows")) {
    Row row;
    for (const auto& [k, v] : r.items()) {
      if (v.is_boolean())
        row.fields.emplace_back(k, v.get<bool>());
      else if (v.is_number_integer())
        row.fields.emplace_back(k, v.get<std::int64_t>());
      else if (v.is_number_float())
        row.fields.emplace_back(k, v.get<double>());
      else if (v.is_string())
        row.fields.emplace_back(k, v.get<std::string>());
      else
        throw std::invalid_argument("unsupported JSON cell type for key " + k);
    }
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

std::string OutputRecord::to_csv() const {
  std::vector<std::string> header;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.fields)
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);

  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_escape(header[i]);
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) os << ',';
      if (const Value* v = row.find(header[i])) os << csv_escape(value_to_string(*v));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace zsf
