#pragma once

#include <stdexcept>
#include <string>

namespace ewb {

/// Malformed or out-of-contract input (bad permutation string, r out of
/// range, non-palindromic polynomial handed to gamma extraction, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A resource guard tripped: enumeration size or oracle budget exceeded.
class GuardRailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed. These are never expected on correct
/// code; they are raised instead of returning a silently wrong number.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ewb
