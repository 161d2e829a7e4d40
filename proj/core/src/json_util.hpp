#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "concepts/error.hpp"

namespace concepts::detail {

using Json = nlohmann::json;

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, line_column(text, e.byte) + ": " + e.what());
  }
}

inline std::string type_name(const Json& j) { return j.type_name(); }

// JSON pointer of a value; the document root is the empty pointer.
inline std::string loc(const std::string& at) { return at.empty() ? "<root>" : at; }

inline void expect_object(const Json& j, const std::string& at) {
  if (!j.is_object()) throw Error(ErrorKind::TypeMismatch, loc(at) + ": expected object, found " + type_name(j));
}

inline void expect_array(const Json& j, const std::string& at) {
  if (!j.is_array()) throw Error(ErrorKind::TypeMismatch, loc(at) + ": expected array, found " + type_name(j));
}

inline void only_fields(const Json& j, const std::string& at, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorKind::UnknownField, at + "/" + key + ": unknown field '" + key + "'");
  }
}

inline const Json& required(const Json& j, const std::string& at, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::MissingField, loc(at) + ": missing field '" + key + "'");
  return *it;
}

inline std::string pointer(const std::string& at, std::size_t index) { return at + "/" + std::to_string(index); }

}  // namespace concepts::detail
