#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evident {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed knowledge-language text, or text that does not resolve against
/// the signature (undeclared names, arity clashes, bad intervals).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A satisfiability problem mentions more ground atoms than the configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Certain evidence would become inconsistent.
class EvidenceConflict : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument is violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace evident
