#pragma once

#include <stdexcept>
#include <string>

namespace nucleal {

/// Base of every error raised by the library. The CLI maps each subclass to a
/// stable exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands whose objects do not line up (composition, tensor, traces).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented invariant of its type. The message names
/// the invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (e.g. theta on a
/// non-nuclear morphism).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A harness capability was requested from an instance that lacks it.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Endomorphism outside the trace class.
class TraceClassError : public Error {
 public:
  using Error::Error;
};

}  // namespace nucleal
