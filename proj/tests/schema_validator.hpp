#pragma once
// Validator for the JSON Schema keywords used by the shipped report schema:
// type, const, enum, required, properties, additionalProperties (false),
// items, minimum, exclusiveMinimum.

#include <json.hpp>
#include <string>
#include <vector>

namespace schema {

using nlohmann::json;

inline bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "number") return v.is_number();
  if (t == "integer") return v.is_number_integer();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

inline void validate(const json& v, const json& s, const std::string& path, std::vector<std::string>& errors) {
  auto fail = [&](const std::string& what) { errors.push_back(path + ": " + what); };
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
    } else {
      ok = has_type(v, s["type"].get<std::string>());
    }
    if (!ok) return fail("wrong type");
  }
  if (s.contains("const") && v != s["const"]) fail("const mismatch");
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) fail("not in enum");
  }
  if (v.is_number()) {
    const double x = v.get<double>();
    if (s.contains("minimum") && x < s["minimum"].get<double>()) fail("below minimum");
    if (s.contains("exclusiveMinimum") && x <= s["exclusiveMinimum"].get<double>()) fail("not above minimum");
  }
  if (v.is_object()) {
    if (s.contains("required")) {
      for (const auto& r : s["required"]) {
        if (!v.contains(r.get<std::string>())) fail("missing '" + r.get<std::string>() + "'");
      }
    }
    const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
    for (const auto& [key, value] : v.items()) {
      if (s.contains("properties") && s["properties"].contains(key)) {
        validate(value, s["properties"][key], path + "." + key, errors);
      } else if (closed) {
        fail("unexpected '" + key + "'");
      }
    }
  }
  if (v.is_array() && s.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      validate(v[i], s["items"], path + "[" + std::to_string(i) + "]", errors);
    }
  }
}

inline std::vector<std::string> validate(const json& v, const json& s) {
  std::vector<std::string> errors;
  validate(v, s, "$", errors);
  return errors;
}

}  // namespace schema
