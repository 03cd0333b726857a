#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfrep {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// Arity, rank or ring mismatch between operands.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// A structure failed its construction-time validation (group table,
// Lie constants, Hopf structure maps, homomorphism images, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfrep
