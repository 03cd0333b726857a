#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "hopfrep/error.hpp"
#include "json.hpp"

namespace hopfrep::detail {

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    throw ParseError(pos == std::string::npos ? msg : msg.substr(pos), line,
                     column);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Re-throws schema errors (wrong types, missing keys) as ValidationError.
template <class F>
auto with_schema(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid ") + what + ": " + e.what());
  }
}

}  // namespace hopfrep::detail
