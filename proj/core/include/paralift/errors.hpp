#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paralift {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lexing or parsing failure. `position` is the 1-based column in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An operation received objects from incompatible charts, or a chart of the
// wrong kind (tangent where base is required, or vice versa).
class ChartError : public Error {
 public:
  explicit ChartError(const std::string& what) : Error(what) {}
};

// Structural equality and randomized numeric evaluation disagreed. This
// always indicates a defect in the expression kernel itself and is never
// resolved silently.
class InternalConsistencyError : public Error {
 public:
  explicit InternalConsistencyError(const std::string& what) : Error(what) {}
};

// Malformed input file. `line` is 1-based.
class SpecFileError : public Error {
 public:
  SpecFileError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace paralift
