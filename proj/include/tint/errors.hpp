#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold (bad test
/// element, mismatched rings, zero divisor ideal, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input is outside the class this library can handle; the message
/// says what the caller should supply instead.
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Partial sums did not become stable by the exponent cap.
class NotStabilizedError : public Error {
 public:
  using Error::Error;
};

/// An invariant the algorithms rely on was violated. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tint
