#pragma once

#include <stdexcept>
#include <string>

namespace solarsim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Query outside tabulated range (no extrapolation is ever performed).
struct RangeError : Error {
  using Error::Error;
};

/// Malformed input file or config.
struct FormatError : Error {
  using Error::Error;
};

/// Singular or near-singular matrix where an inverse is required.
struct ConditioningError : Error {
  using Error::Error;
};

/// Nonlinear solver exhausted its homotopy attempts.
struct ConvergenceError : Error {
  double last_residual_norm = 0.0;
  explicit ConvergenceError(const std::string& msg, double rnorm = 0.0)
      : Error(msg), last_residual_norm(rnorm) {}
};

/// Wall-clock budget exceeded.
struct TimeoutError : Error {
  using Error::Error;
};

}  // namespace solarsim
