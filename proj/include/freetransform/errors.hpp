#pragma once

#include <stdexcept>
#include <string>

namespace freetransform {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (branch cut, non-positive
/// Gamma argument, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series or iteration exhausted its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of panels before meeting the tolerance.
class MaxSubdivisionError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// An integrand produced NaN or Inf.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Malformed constructor or function input (duplicate atoms, negative
/// masses, mismatched list lengths, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Finite-difference step incompatible with the evaluation point.
class StepError : public Error {
 public:
  using Error::Error;
};

}  // namespace freetransform
