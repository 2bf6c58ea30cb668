#pragma once

// Minimal JSON-Schema checker covering the subset the shipped report schema
// uses: type, enum, required, properties, additionalProperties (boolean),
// items, minItems/maxItems, oneOf and local $ref into #/definitions.

#include <string>

#include <json.hpp>

namespace schemacheck {

using nlohmann::json;

inline const json& resolve_ref(const json& schema, const json& root) {
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
    return root.at("definitions").at(ref.substr(prefix.size()));
  }
  return schema;
}

inline bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "null") return value.is_null();
  return false;
}

inline bool validate(const json& schema_in, const json& value, const json& root,
                     std::string* why = nullptr) {
  const json& schema = resolve_ref(schema_in, root);
  auto fail = [&](const std::string& msg) {
    if (why && why->empty()) *why = msg;
    return false;
  };
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const auto& option : schema["oneOf"])
      if (validate(option, value, root)) ++hits;
    if (hits != 1) return fail("oneOf matched " + std::to_string(hits) + " options");
    return true;
  }
  if (schema.contains("type") && !type_matches(schema["type"].get<std::string>(), value))
    return fail("expected type " + schema["type"].get<std::string>() + ", got " + value.dump());
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& e : schema["enum"]) hit = hit || e == value;
    if (!hit) return fail("value " + value.dump() + " not in enum");
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return fail("missing required key " + key.get<std::string>());
    const json props = schema.value("properties", json::object());
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props.contains(it.key())) {
        if (!validate(props[it.key()], it.value(), root, why))
          return fail("property " + it.key() + " invalid");
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        return fail("unexpected property " + it.key());
      }
    }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>())
      return fail("array too short");
    if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>())
      return fail("array too long");
    if (schema.contains("items"))
      for (const auto& item : value)
        if (!validate(schema["items"], item, root, why)) return fail("array item invalid");
  }
  return true;
}

inline bool validate_report(const json& schema, const json& report, std::string* why = nullptr) {
  return validate(schema, report, schema, why);
}

}  // namespace schemacheck
