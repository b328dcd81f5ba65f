#pragma once

#include <stdexcept>
#include <string>

namespace fixedloci {

/// Base of every library error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input. The CLI maps this to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale guard was exceeded. The CLI maps this to exit code 3.
class LimitError : public Error {
 public:
  using Error::Error;
};

class DimMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotInjective : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The cokernel of a lattice map has torsion: the torus action is not free.
class TorsionCokernel : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class FreeActionViolated : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyStableLocus : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Raised by Kempf routines when the support is not unstable (m >= 0).
class NotUnstable : public Error {
 public:
  using Error::Error;
};

class ZeroDimensionVector : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TooLarge : public LimitError {
 public:
  using LimitError::LimitError;
};

}  // namespace fixedloci
