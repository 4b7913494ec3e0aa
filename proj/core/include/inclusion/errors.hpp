#pragma once

#include <stdexcept>
#include <string>

namespace inclusion {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector dimensions disagree with an operator or with each other.
struct DimMismatch : Error {
  using Error::Error;
};

// Too few data points for a statistical operation (e.g. rate fitting).
struct InsufficientData : Error {
  using Error::Error;
};

// An iterate acquired a NaN or infinite entry; the run is aborted.
struct NonFiniteIterate : Error {
  using Error::Error;
};

// Step size outside the admissible interval for the chosen algorithm.
struct StepSizeViolation : Error {
  using Error::Error;
};

// A scalar parameter violates its documented constraint.
struct ParameterViolation : Error {
  using Error::Error;
};

// A stated precondition of a diagnostic bound does not hold.
struct PreconditionViolation : Error {
  using Error::Error;
};

// Operation not available for this constraint-set kind.
struct UnsupportedSet : Error {
  using Error::Error;
};

// Dimension exceeds the documented limit of an operation.
struct DimTooLarge : Error {
  using Error::Error;
};

// A matrix claimed monotone fails the positive-semidefiniteness check.
struct NotMonotone : Error {
  using Error::Error;
};

// Config document is syntactically valid but semantically unusable.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace inclusion
