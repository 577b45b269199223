#ifndef HARMONIC_ERROR_HPP
#define HARMONIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace harmonic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (group specs, grids, fixtures).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments that violate an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two values that must share an owning group do not.
class OwnerMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A caller-supplied scalar field failed or returned a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Result not representable in double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Iterative method stopped at its cap without meeting the tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace harmonic

#endif  // HARMONIC_ERROR_HPP
