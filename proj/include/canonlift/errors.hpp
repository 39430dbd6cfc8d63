#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace canonlift {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ModeMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedSurface : public Error {
 public:
  using Error::Error;
};

class InapplicableMove : public Error {
 public:
  using Error::Error;
};

class NonIntegralTurning : public Error {
 public:
  using Error::Error;
};

class MalformedAssociatedSubgroup : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A reference to a segment, crossing, turn or component that does not exist.
class MissingReference : public Error {
 public:
  using Error::Error;
};

}  // namespace canonlift
