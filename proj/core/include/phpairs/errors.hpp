#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phpairs {

/// A caller broke an operation's precondition (bad vertex id, a "clique" that
/// is not one, a gadget that contains a C4, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an internal invariant fails. Seeing one of these means a bug
/// in the library, not bad input.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed DIMACS or trace input. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exponential-time oracle was asked to work on a graph above its cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phpairs
