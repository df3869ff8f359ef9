#pragma once

#include <stdexcept>
#include <string>

namespace rigidchain {

/// Raised when an internal postcondition fails. Always indicates a bug in the
/// library, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Raised by the permutation oracle when asked for a rank it cannot enumerate.
class OracleRangeError : public std::out_of_range {
 public:
  explicit OracleRangeError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace rigidchain
