#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compcent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (bad weight, self-loop, size).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A statistic is undefined for the data (zero variance, constant sum, ...).
class Degenerate : public Error {
 public:
  using Error::Error;
};

/// Graph does not satisfy a connectivity precondition.
class NotConnected : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line and column of the fault.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace compcent
