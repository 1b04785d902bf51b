#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlm {

// Base for all input/usage errors raised by the library. Mathematical
// negatives (non-divisibility, a predicate that does not hold) are reported
// through result values, never through exceptions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Variable count or ambient dimension of two operands disagree.
class DimensionError : public Error {
public:
  using Error::Error;
};

// Operation called outside its domain: index out of range, zero divisor,
// zero multiplier where a nonzero one is required, and similar.
class DomainError : public Error {
public:
  using Error::Error;
};

// A computed identity that must hold by construction failed. Indicates a bug,
// not bad input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Syntax or semantic error in user text, with a 1-based position.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string& m, std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + m;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

inline void require(bool condition, const char* what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace hlm
