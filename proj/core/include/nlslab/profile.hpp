#pragma once

#include "nlslab/datum.hpp"
#include "nlslab/phase.hpp"
#include "nlslab/spectral_ops.hpp"

namespace nlslab {

// Corrected leading-order behavior on the x-grid:
//   u_p(t, x) = (i t)^(-1/2) e^{i psi(t,x)} e^{-i lambda |uhat(x/t)|^2 log t}
//               uhat(x/t),
// identically zero where uhat(x/t) vanishes (in particular |x| < c0 t).
// Requires t >= max(1, T1).
ComplexField asymptotic_profile(const ScatteringDatum& datum,
                                const PhaseTable& phase, double t,
                                const GridPtr& x_grid);

// Same with a prebuilt slice (reuse across terms evaluated at one t).
ComplexField asymptotic_profile(const ScatteringDatum& datum,
                                const PhaseSlice& slice, double t,
                                const GridPtr& x_grid);

// Uncorrected free leading term (i t)^(-1/2) e^{i x^2/(2t)} uhat(x/t):
// the control object that modified scattering is measured against.
ComplexField free_leading_profile(const ScatteringDatum& datum, double t,
                                  const GridPtr& x_grid);

struct ProfileSnapshot {
  double t = 0.0;
  ComplexField u_p;   // x-grid
  ComplexField w;     // profile grid
};

ProfileSnapshot profile_snapshot(const ScatteringDatum& datum,
                                 const PhaseTable& phase, double t,
                                 const GridPtr& x_grid, const GridPtr& p_grid);

// F(u) = lambda |u|^2 u, pointwise.
ComplexField cubic(const ComplexField& f, double lambda);
cplx cubic(cplx z, double lambda);

// Exact algebraic split of F(z1) - F(z0) into the linearization around z0
// and the remainder G:
//   F(z1) = F(z0) + 2 lambda |z0|^2 (z1-z0) + lambda z0^2 conj(z1-z0)
//           + G(z1-z0, z0),
//   G(z, z0) = 2 lambda Re[z z0] z + lambda |z|^2 z0 + lambda |z|^2 z.
struct CubicSplit {
  cplx base;         // F(z0)
  cplx linear;       // 2 lambda |z0|^2 (z1 - z0)
  cplx conj_linear;  // lambda z0^2 conj(z1 - z0)
  cplx rest;         // G(z1 - z0, z0)
  cplx sum() const { return base + linear + conj_linear + rest; }
};
CubicSplit taylor_split(cplx z1, cplx z0, double lambda);
cplx g_remainder(cplx z, cplx z0, double lambda);
ComplexField g_remainder(const ComplexField& v, const ComplexField& u_p,
                         double lambda);

// L2 defect of the modulated-datum evolution law i dw/dt = F(w)/t.
// fd_dt == 0 uses the closed-form time derivative (defect is pure round-off);
// fd_dt > 0 uses centered differences with that step. Requires t >= 2.
double profile_ode_residual(const ScatteringDatum& datum, const GridPtr& grid,
                            double t, double fd_dt = 0.0);

}  // namespace nlslab
