#pragma once

#include <stdexcept>
#include <string>

namespace infsub {

/// Caller broke an API contract (mismatched fields, bad dimensions, bad labels).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but outside the mathematical domain of the operation
/// (inverting zero, exponentiating a non-nilpotent matrix, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A request exceeds a configured size cap.
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// A computation produced output violating a guaranteed property. Raised by
/// decompose when a theorem hypothesis does not hold for the input.
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace infsub
