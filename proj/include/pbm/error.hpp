#pragma once

#include <stdexcept>
#include <string>

namespace pbm {

/// Base class for every error raised by the library.
///
/// The subclasses are disjoint categories; the command-line front end maps
/// each one to its own exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document or value that cannot be interpreted.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments are well formed but violate an operation's precondition
/// (mismatched ground sets, a non-chain pomset where a chain is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An operation would have to materialize more vectors than allowed.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A checked mathematical claim did not hold on the given instance.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace pbm
