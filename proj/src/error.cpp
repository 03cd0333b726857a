#include "hopfrep/error.hpp"

namespace hopfrep {

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      message_(message),
      line_(line),
      column_(column) {}

}  // namespace hopfrep
