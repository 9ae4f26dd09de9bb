#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace eigenbound {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An estimate was evaluated outside the parameter range where it holds.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// K > 0 with a diameter longer than the Myers bound allows (|alpha| > pi/2).
class MyersViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An integral that is +infinity. The value is carried so callers can keep
/// max-of-bounds aggregation total.
class DivergentIntegral : public Error {
 public:
  using Error::Error;
  [[nodiscard]] double value() const noexcept { return std::numeric_limits<double>::infinity(); }
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NoRoot : public Error {
 public:
  using Error::Error;
};

/// The eigenvalue scan found no sign change of the boundary functional.
class NoBracket : public Error {
 public:
  using Error::Error;
};

/// The adaptive ODE step size underflowed.
class StiffIntegration : public Error {
 public:
  using Error::Error;
};

class InvalidTestFunction : public Error {
 public:
  using Error::Error;
};

class NonPositiveCoefficient : public Error {
 public:
  using Error::Error;
};

/// The eigenfunction derivative vanished in the interior, so a fractional
/// power of it is not defined.
class DegenerateDerivative : public Error {
 public:
  using Error::Error;
};

}  // namespace eigenbound
