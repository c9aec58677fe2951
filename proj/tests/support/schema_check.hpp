#pragma once

#include <regex>
#include <string>

#include <json.hpp>

namespace itk::test {

// Checks a document against the subset of JSON Schema the shipped schemas
// use: type, required, properties, patternProperties, additionalProperties,
// items, enum, minimum.  Returns an empty string on success, else the first
// violation found.
inline std::string schema_violation(const nlohmann::json& schema,
                                    const nlohmann::json& doc,
                                    const std::string& path = "$") {
  using nlohmann::json;

  if (schema.contains("type")) {
    const std::string& t = schema["type"].get_ref<const std::string&>();
    bool ok = (t == "object" && doc.is_object()) ||
              (t == "array" && doc.is_array()) ||
              (t == "string" && doc.is_string()) ||
              (t == "integer" && doc.is_number_integer()) ||
              (t == "number" && doc.is_number()) ||
              (t == "boolean" && doc.is_boolean());
    if (!ok) return path + ": expected type " + t;
  }

  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema["enum"]) found = found || (v == doc);
    if (!found) return path + ": value not in enum";
  }

  if (schema.contains("minimum") && doc.is_number_integer()) {
    if (doc.get<long>() < schema["minimum"].get<long>()) {
      return path + ": below minimum";
    }
  }

  if (schema.contains("pattern") && doc.is_string()) {
    std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_match(doc.get<std::string>(), re)) {
      return path + ": pattern mismatch";
    }
  }

  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& name : schema["required"]) {
        if (!doc.contains(name.get<std::string>())) {
          return path + ": missing required \"" + name.get<std::string>() +
                 "\"";
        }
      }
    }
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      bool matched = false;
      if (schema.contains("properties") &&
          schema["properties"].contains(it.key())) {
        matched = true;
        std::string v = schema_violation(schema["properties"][it.key()],
                                         it.value(), path + "." + it.key());
        if (!v.empty()) return v;
      }
      if (schema.contains("patternProperties")) {
        for (auto ps = schema["patternProperties"].begin();
             ps != schema["patternProperties"].end(); ++ps) {
          if (std::regex_match(it.key(), std::regex(ps.key()))) {
            matched = true;
            std::string v = schema_violation(ps.value(), it.value(),
                                             path + "." + it.key());
            if (!v.empty()) return v;
          }
        }
      }
      if (!matched && schema.contains("additionalProperties") &&
          schema["additionalProperties"].is_boolean() &&
          !schema["additionalProperties"].get<bool>()) {
        return path + ": unexpected property \"" + it.key() + "\"";
      }
    }
  }

  if (doc.is_array() && schema.contains("items")) {
    for (size_t i = 0; i < doc.size(); ++i) {
      std::string v = schema_violation(schema["items"], doc[i],
                                       path + "[" + std::to_string(i) + "]");
      if (!v.empty()) return v;
    }
  }

  return "";
}

}  // namespace itk::test
