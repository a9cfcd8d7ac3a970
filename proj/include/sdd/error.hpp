#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdd {

/// Malformed genome text. Carries the 1-based position of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a precondition (wrong genome class, family mismatch, bad k).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded (oracle size, elimination width).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural property the solvers rely on does not hold. Indicates a bug or corrupted state.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sdd
