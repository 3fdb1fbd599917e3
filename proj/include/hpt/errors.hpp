#pragma once

#include <stdexcept>
#include <string>

namespace hpt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition supplied by the caller.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Position outside a row.
class IndexError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A configured depth limit would be exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

// A recurrence produced a non-positive term.
class SequenceDegenerate : public Error {
 public:
  using Error::Error;
};

// The solved left-neighbour value is not an integer.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

// The solved left-neighbour value m fails 1 <= m < f_j.
class NeighborBoundViolated : public Error {
 public:
  using Error::Error;
};

// A result that passed its theorem conditions failed simulation. Always a bug.
class VerificationMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace hpt
