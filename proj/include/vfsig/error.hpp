#pragma once

#include <stdexcept>
#include <string>

namespace vfsig {

// Malformed parameters (non-prime p, out-of-range class, size mismatch).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A desk-scale resource guard was exceeded.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that should hold did not (certificate search, consistency
// checks of the experimental decomposition).
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vfsig
