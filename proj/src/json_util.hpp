// Copyright 2026 The Framekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Internal strict-walk helpers over nlohmann JSON. Every reader takes a
// JSON-pointer-style `path` so schema errors name their exact location.

#ifndef FRAMEKIT_SRC_JSON_UTIL_HPP
#define FRAMEKIT_SRC_JSON_UTIL_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "framekit/model.hpp"
#include "json.hpp"

namespace framekit::jsonu {

using json = nlohmann::ordered_json;

[[noreturn]] inline void bad_type(const std::string& path,
                                  const char* expected) {
  throw Error("type-mismatch",
              "expected " + std::string(expected) + " at " + path);
}

inline void check_object(const json& j, const std::string& path) {
  if (!j.is_object()) bad_type(path, "an object");
}

// Rejects keys outside `keys`, so typos never pass silently.
inline void check_known(const json& obj,
                        std::initializer_list<const char*> keys,
                        const std::string& path) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys)
      if (item.key() == k) known = true;
    if (!known)
      throw Error("unknown-field",
                  "unknown field '" + item.key() + "' at " + path);
  }
}

inline const json& get_field(const json& obj, const char* key,
                             const std::string& path) {
  if (!obj.contains(key))
    throw Error("missing-field", "missing required field '" +
                                     std::string(key) + "' at " + path);
  return obj.at(key);
}

inline std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) bad_type(path, "a string");
  return j.get<std::string>();
}

inline int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad_type(path, "an integer");
  return j.get<int>();
}

inline bool get_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) bad_type(path, "a boolean");
  return j.get<bool>();
}

inline const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) bad_type(path, "an array");
  return j;
}

inline std::vector<std::string> get_strings(const json& j,
                                            const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const json& item : get_array(j, path))
    out.push_back(get_string(item, path + "/" + std::to_string(i++)));
  return out;
}

inline std::optional<std::string> opt_string(const json& obj, const char* key,
                                             const std::string& path) {
  if (!obj.contains(key)) return std::nullopt;
  return get_string(obj.at(key), path + "/" + key);
}

inline json parse_or_throw(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("json-parse", e.what());
  }
}

}  // namespace framekit::jsonu

#endif  // FRAMEKIT_SRC_JSON_UTIL_HPP
