#pragma once

#include <stdexcept>
#include <string>

namespace uecsm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A precondition of a construction or criterion is violated.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// Eigenvalues are not separated enough for the angle tests to apply.
class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class OrthogonalEigenvectors : public Error {
 public:
  using Error::Error;
};

class IsotropicVector : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class RepeatedDiagonal : public Error {
 public:
  using Error::Error;
};

class ExhaustedRetries : public Error {
 public:
  using Error::Error;
};

class CostGuard : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace uecsm
