#pragma once

#include <stdexcept>
#include <string>

namespace nlslab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two fields refer to different grids, or a field is in the wrong space.
struct GridMismatchError : Error {
  using Error::Error;
};

// A field does not decay below the required level at the domain boundary,
// or a resample was requested outside the covered domain with non-negligible
// magnitude there.
struct TruncationError : Error {
  double boundary_magnitude = 0.0;
  TruncationError(const std::string& msg, double mag)
      : Error(msg), boundary_magnitude(mag) {}
};

// Fixed-point iteration failed to contract.
struct ContractionError : Error {
  double expansion_factor = 0.0;
  ContractionError(const std::string& msg, double factor)
      : Error(msg), expansion_factor(factor) {}
};

// Certified tail bound of a truncated improper integral exceeds tolerance.
struct TailBoundError : Error {
  double bound = 0.0;
  TailBoundError(const std::string& msg, double b) : Error(msg), bound(b) {}
};

// (t, x) outside the momentum window covered by a phase table.
struct WindowError : Error {
  using Error::Error;
};

// A stated precondition does not hold; carries the computed threshold.
struct PreconditionError : Error {
  double threshold = 0.0;
  PreconditionError(const std::string& msg, double thr)
      : Error(msg), threshold(thr) {}
};

// Map inversion requested where monotonicity fails.
struct InvertibilityError : Error {
  using Error::Error;
};

// Evolution produced NaN/overflow or mass escaped the domain boundary.
struct BlowUpError : Error {
  double t_last_good = 0.0;
  BlowUpError(const std::string& msg, double t) : Error(msg), t_last_good(t) {}
};

struct ConfigError : Error {
  using Error::Error;
};

struct InsufficientDataError : Error {
  using Error::Error;
};

}  // namespace nlslab
