#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mbm {

/// Incompatible matrix shapes, or a structure whose matrices do not fit its
/// declared dimension.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedBraiding : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Data that should satisfy an invariant (by construction or by a theorem)
/// does not. Signals corrupted input.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line 0 means the problem is not tied to one line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mbm
