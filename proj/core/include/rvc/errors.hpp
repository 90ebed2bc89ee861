#pragma once

#include <stdexcept>
#include <string>

namespace rvc {

/// Precondition violation: self-loops, out-of-range ids, disconnected input
/// handed to a decider, malformed witnesses and the like.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive procedure was asked to run beyond its desk-scale limit.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Text input (RVCG, DIMACS, pair files, certificates) did not parse.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace rvc
