#ifndef K3AUTO_ERRORS_HPP
#define K3AUTO_ERRORS_HPP

#include <stdexcept>

namespace k3auto {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

/// Malformed textual input (rational literals, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Data violating a structural precondition, e.g. degree bounds of a
/// Weierstrass datum or parity of a 2-elementary invariant pair.
class InvalidDatum : public Error {
 public:
  using Error::Error;
};

/// v(a) >= 4 and v(b) >= 6 at some place.
class NonMinimalDatum : public InvalidDatum {
 public:
  using InvalidDatum::InvalidDatum;
};

/// A linear or combinatorial system with no admissible solution.
class InconsistentConfiguration : public Error {
 public:
  using Error::Error;
};

/// Fiber action that cannot be realized on the given fiber shape.
class IncompatibleAction : public Error {
 public:
  using Error::Error;
};

}  // namespace k3auto

#endif  // K3AUTO_ERRORS_HPP
