#pragma once

#include <stdexcept>
#include <string>

namespace urysohn {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit code 2 (input error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is not well-formed: missing table entries, wrong dimensions,
/// unparsable text.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A value or identifier lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for the given monoid (e.g. needs infinity).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace urysohn
