#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cobord {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible construction parameters (generator cutoff, truncation order).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Operands that do not live in the same space, or a call outside an
/// operation's contract.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Mathematically inadmissible input (non-unit linear term, non-symmetric
/// expression, invalid realization, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested truncation order cannot represent the result exactly.
class TruncationError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public Error {
 public:
  /// Error without a source position (e.g. a schema violation).
  explicit ParseError(const std::string& message) : Error(message), line_(0), column_(0) {}
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cobord
