#pragma once

#include "nlslab/grid.hpp"

namespace nlslab {

// Closed-form scattering datum in the spectral variable: a symmetric pair of
// C-infinity bumps
//   uhat(xi) = eps * [ g((xi-m)/w) + g((xi+m)/w) ],  g(s) = exp(1 - 1/(1-s^2))
// supported exactly on window_lo <= |xi| <= window_hi, with peak value eps
// attained at xi = +-m (so |uhat|_inf == eps by construction). Evaluating it
// at x/t needs no interpolation.
struct ScatteringDatum {
  double window_lo = 1.0;
  double window_hi = 3.0;
  double epsilon = 0.1;
  double lambda = 1.0;   // cubic coupling; sign free
  double c0 = 1.0;       // support constraint: window_lo >= c0

  double center() const { return 0.5 * (window_lo + window_hi); }
  double halfwidth() const { return 0.5 * (window_hi - window_lo); }

  double uhat(double xi) const;
  double duhat(double xi) const;
  void validate() const;
};

// Grid for fields living in the datum's variable (the profile grid). Sized
// so that dispersive remainders of compactly supported data decay below
// round-off at the edge.
GridPtr make_profile_grid(std::size_t n = 4096, double half_length = 24.0);

// w(t, xi) = exp(-i lambda |uhat(xi)|^2 log t) uhat(xi): the slowly rotating
// datum whose modulus never changes. Requires t >= 1.
ComplexField modulated_datum(const ScatteringDatum& datum, const GridPtr& grid,
                             double t);

// Closed-form time derivative of the modulated datum.
ComplexField modulated_datum_dt(const ScatteringDatum& datum, const GridPtr& grid,
                                double t);

}  // namespace nlslab
