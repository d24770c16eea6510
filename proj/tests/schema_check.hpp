#pragma once

// Just enough JSON Schema to check the shipped schemas: type, required,
// properties, additionalProperties, items, enum, pattern, local $ref.

#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace rmatch::testing {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline bool type_matches(const std::string& type, const json& v) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (type == "number") return v.is_number();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  return false;
}

inline bool validate_schema(const json& root, const json& schema,
                            const json& value, std::string& err,
                            const std::string& where = "$") {
  if (schema.contains("$ref")) {
    std::string ref = schema["$ref"];
    if (ref.rfind("#/", 0) != 0) {
      err = where + ": unsupported $ref " + ref;
      return false;
    }
    const json* target = &root;
    std::stringstream ss(ref.substr(2));
    std::string part;
    while (std::getline(ss, part, '/')) {
      if (!target->contains(part)) {
        err = where + ": dangling $ref " + ref;
        return false;
      }
      target = &(*target)[part];
    }
    return validate_schema(root, *target, value, err, where);
  }

  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), value);
    } else {
      for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), value);
    }
    if (!ok) {
      err = where + ": type mismatch";
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema["enum"]) ok = ok || alt == value;
    if (!ok) {
      err = where + ": not in enum";
      return false;
    }
  }
  if (schema.contains("pattern") && value.is_string()) {
    std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_match(value.get<std::string>(), re)) {
      err = where + ": pattern mismatch for \"" + value.get<std::string>() + "\"";
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) {
          err = where + ": missing required key " + key.get<std::string>();
          return false;
        }
    const json props =
        schema.contains("properties") ? schema["properties"] : json::object();
    if (schema.value("additionalProperties", json(true)) == json(false))
      for (const auto& [key, sub] : value.items())
        if (!props.contains(key)) {
          err = where + ": unexpected key " + key;
          return false;
        }
    for (const auto& [key, sub] : value.items())
      if (props.contains(key) &&
          !validate_schema(root, props[key], sub, err, where + "." + key))
        return false;
  }
  if (value.is_array() && schema.contains("items")) {
    int i = 0;
    for (const auto& item : value) {
      if (!validate_schema(root, schema["items"], item, err,
                           where + "[" + std::to_string(i) + "]"))
        return false;
      ++i;
    }
  }
  return true;
}

inline bool validate_against_file(const std::string& schema_path,
                                  const json& value, std::string& err) {
  json schema = load_json_file(schema_path);
  return validate_schema(schema, schema, value, err);
}

}  // namespace rmatch::testing
