#pragma once

#include <stdexcept>
#include <string>

namespace dynbax {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input (unknown vertex, bad graph, bad L).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A required value lies outside the domain of a map (missing vertex,
/// singular denominator).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands do not live on the same fiber (base or order mismatch).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A bracket vanished at an argument that a construction needs.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The inputs do not satisfy the precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A fiber operator that must be invertible is singular.
class InversionError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for the requested input kind.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace dynbax
