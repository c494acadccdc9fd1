#pragma once

#include <stdexcept>
#include <string>

namespace squeezeslab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (omega <= 0, l < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A denominator of the scattering or narrow-band formulas vanished.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The requested approximation regime does not hold (narrow-band, pulse train).
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A quadrature did not converge under grid doubling.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// The l_max equation has no admissible solution.
class NoExtremumError : public Error {
 public:
  using Error::Error;
};

}  // namespace squeezeslab
