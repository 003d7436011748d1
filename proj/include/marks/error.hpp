#pragma once

#include <stdexcept>
#include <string>

namespace marks {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle notation, pattern files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotSolvableError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A configured size limit (group order, coset index) was exceeded.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Constraint propagation reached a contradiction. Always a bug or corrupt input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace marks
