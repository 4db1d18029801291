#pragma once

#include <stdexcept>
#include <string>

namespace yosp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: zero denominators, bad parity strings, mismatched sizes.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A zero or pole is not rational, so the exact algorithms cannot certify the answer.
class UnsupportedRoot : public Error {
 public:
  using Error::Error;
};

/// The hypotheses of a transformation or criterion are not met by the input.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Series whose constant term is not invertible.
class SingularSeries : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a rational function at one of its poles.
class PoleError : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// A computed identity failed; `what()` names the witness.
class Violation : public Error {
 public:
  using Error::Error;
};

}  // namespace yosp
