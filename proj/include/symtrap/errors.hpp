#pragma once

#include <stdexcept>
#include <string>

namespace symtrap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An oracle construction was asked for a representation larger than its guard.
class DimensionGuardExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A class function did not reduce to non-negative integer multiplicities.
class NotRepresentationCharacter : public Error {
 public:
  using Error::Error;
};

// An internal invariant broke. Always a bug, never an input problem.
class AlgorithmViolation : public Error {
 public:
  using Error::Error;
};

// No g -> infinity level carrying the requested irrep was found below the ceiling.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagreed.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace symtrap
