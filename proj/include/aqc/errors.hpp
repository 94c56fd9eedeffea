#pragma once

#include <stdexcept>
#include <string>

namespace aqc {

// Raised for arguments outside an operation's domain (q = 0, malformed
// length sets, misaligned multiplicity vectors).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an identity that must hold exactly does not: an inexact
// division, a negative count, an impossible exponent. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when a brute-force route is asked for more work than its cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aqc
