#pragma once

#include <stdexcept>
#include <string>

namespace gfid {

// Base for every error raised by the library. Callers that only care about
// success/failure can catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Input state or channel violates an operation's precondition
/// (for example a mixed state handed to the pure-input fidelity formula).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class UnsupportedChannel : public Error {
 public:
  using Error::Error;
};

}  // namespace gfid
