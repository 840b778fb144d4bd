#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ore {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands come from different fields, rings, or Ore handles.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain (bad tag, non-monic divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A basis enumeration over an infinite-dimensional ring was requested without caps.
class CapsError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace ore
