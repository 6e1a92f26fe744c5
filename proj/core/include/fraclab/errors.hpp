#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition (smoothness, placement, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Integral or kernel is infinite at the requested point.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Point coincides with a kernel singularity.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Requested combination is not implemented (dimension, anisotropy, ...).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Integrand produced a non-finite sample.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace fraclab
