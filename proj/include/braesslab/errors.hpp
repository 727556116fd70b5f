#pragma once

#include <stdexcept>
#include <string>

namespace braesslab {

// Out-of-domain arguments: bad n, vertex ids, path lengths, family parameters.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed edge-list input. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An operation that needs a connected graph got a disconnected one.
class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagreed. Never expected in a correct build.
class InternalConsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The brute-force oracle refuses inputs above its size bound.
class OracleBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floating-point eigen-solver failure.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace braesslab
