#pragma once

#include <stdexcept>
#include <string>

namespace kerrsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A wavelength (or other argument) outside the tabulated validity range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Arguments that violate a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Numerical procedure failed to reach its requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Not enough coincidences to form an estimate.
class InsufficientStatistics : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A response curve without the shape an operation expects.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace kerrsim
