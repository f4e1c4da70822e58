#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdwork {

/// Malformed input: shapes, ranges, or arguments outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A physically invalid object: non-unitary gate, non-positive state, etc.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Circuit-file syntax or semantic error with a 1-based source location.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace kdwork
