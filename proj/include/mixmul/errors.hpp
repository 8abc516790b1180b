#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixmul {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or instance text. Carries a 1-based line/column when
/// known (line 0 means "single-line input", column is then the offset + 1).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return "column " + std::to_string(column) + ": " + what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Operands living in different rings (or using different monomial orders).
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition failed (nilpotent I, J not m-primary, x not in I_i, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A "for all sufficiently large" quantity did not stabilize on the tried windows.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

}  // namespace mixmul
