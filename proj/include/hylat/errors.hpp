#ifndef HYLAT_ERRORS_HPP
#define HYLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hylat {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix sizes.
struct DimensionError : Error {
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (norm >= 1 in the
/// Poincare ball, invalid rotation kind, nonpositive curvature, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Points off the hyperboloid sheet, or non-tangent vectors passed where a
/// tangent vector is required.
struct ManifoldError : Error {
  using Error::Error;
};

/// Eigenvalue structure unusable for a factorization (fewer than d
/// nonnegative eigenvalues when splitting Z Lambda Z^T).
struct SpectrumError : Error {
  using Error::Error;
};

/// Optimization produced a non-finite loss.
struct DivergenceError : Error {
  DivergenceError(const std::string& what, int iteration_)
      : Error(what), iteration(iteration_) {}
  int iteration;
};

/// Invalid configuration value.
struct ConfigError : Error {
  using Error::Error;
};

/// Malformed input data (edge lists, embedding files, reports).
struct DataError : Error {
  using Error::Error;
};

/// A statistic is undefined for the given inputs (e.g. AUC with a
/// single-class holdout set).
struct StatError : Error {
  using Error::Error;
};

}  // namespace hylat

#endif  // HYLAT_ERRORS_HPP
