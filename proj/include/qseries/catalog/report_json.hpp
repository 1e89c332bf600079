#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "qseries/catalog/registry.hpp"

namespace qseries::catalog {

inline std::string integer_string(const Integer& x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = params;
  j["mode"] = to_string(r.mode);
  j["order"] = r.order;
  j["equal"] = r.equal;
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                           {"lhs", integer_string(r.first_mismatch->lhs)},
                           {"rhs", integer_string(r.first_mismatch->rhs)}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["millis"] = r.millis;
  return j;
}

// Empty string when `j` follows the report schema, a diagnostic otherwise.
inline std::string report_schema_error(const nlohmann::json& j) {
  static const char* const keys[] = {"identity", "params", "mode", "order", "equal", "first_mismatch", "millis"};
  if (!j.is_object()) return "report is not an object";
  if (j.size() != 7) return "report must have exactly 7 fields";
  for (const char* k : keys)
    if (!j.contains(k)) return std::string("missing field ") + k;
  if (!j["identity"].is_string()) return "identity must be a string";
  if (!j["params"].is_object()) return "params must be an object";
  for (const auto& [k, v] : j["params"].items())
    if (!v.is_number_integer()) return "parameter " + k + " must be an integer";
  if (j["mode"] != "exact" && j["mode"] != "truncated") return "mode must be exact or truncated";
  if (!j["order"].is_number_integer()) return "order must be an integer";
  if (!j["equal"].is_boolean()) return "equal must be a boolean";
  if (!j["millis"].is_number_integer()) return "millis must be an integer";
  const auto& m = j["first_mismatch"];
  if (m.is_null()) return j["equal"].get<bool>() ? "" : "a failing report needs first_mismatch";
  if (j["equal"].get<bool>()) return "a passing report must have first_mismatch null";
  if (!m.is_object() || m.size() != 3 || !m.contains("exponent") || !m.contains("lhs") || !m.contains("rhs"))
    return "first_mismatch must have exponent, lhs and rhs";
  if (!m["exponent"].is_number_integer()) return "mismatch exponent must be an integer";
  for (const char* side : {"lhs", "rhs"}) {
    if (!m[side].is_string()) return std::string("mismatch ") + side + " must be a decimal string";
    const std::string s = m[side];
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      return std::string("mismatch ") + side + " must be a decimal string";
  }
  return "";
}

}  // namespace qseries::catalog
