#pragma once

#include "nlslab/profile.hpp"

namespace nlslab {

// The error terms of the integral equation satisfied by v = u - u_p:
//   e1 = M_psi D (1-chi) R w            (dispersive remainder of the profile)
//   e2 = -t^{-1} M_psi D (1-chi) R F(w) (its cubic counterpart)
//   e3 = i1 + i2 + i3 + i4              (modified-propagator commutator)
// with
//   i1: transport part   -i (1-chi_t) M_psi (a1 d/dx + a2) D (FMF^{-1}) w
//   i2: cutoff phases    -( i a1 chi'_t / t + chi''_t / (2 t^2) ) P w
//   i3: cutoff gradient  -(chi'_t / t^2) d/dx P w
//   i4: short-range tail (1-chi_t) V_S P w
// where P = M_psi D (FMF^{-1}) is the cutoff-free modified propagator image,
// a1 = psi_x - x/t, a2 = (psi_xx - 1/t)/2 and chi'_t(x) = chi'(x/t).
struct ResidualBundle {
  double t = 0.0;
  ComplexField e1, e2, e3;
  ComplexField i1, i2, i3, i4;
  double e1_h1 = 0, e2_h1 = 0, e3_h1 = 0;
  double i1_h1 = 0, i2_h1 = 0, i3_h1 = 0, i4_h1 = 0;
};

class ResidualBuilder {
 public:
  ResidualBuilder(ScatteringDatum datum, PhaseTablePtr phase, PotentialSpec spec,
                  GridPtr profile_grid, GridPtr x_grid);

  ComplexField e1(double t) const;
  ComplexField e2(double t) const;

  // All terms at once; requires t > t2() so the singular part is cleared by
  // the cutoff, else PreconditionError carrying t2.
  ResidualBundle bundle(double t) const;

  // (1 - chi_t) M_psi(t) D(t) (FMF^{-1}) g for a field g on the profile grid.
  // With g = w(t) this is the object whose flow derivative e3 measures.
  ComplexField cutoff_dollard_image(const ComplexField& g, double t) const;

  double t2() const { return t2_; }
  const GridPtr& x_grid() const { return x_grid_; }
  const GridPtr& profile_grid() const { return p_grid_; }
  const ScatteringDatum& datum() const { return datum_; }
  const PotentialSpec& potential() const { return spec_; }
  const PhaseTable& phase() const { return *phase_; }

 private:
  ComplexField masked_profile_term(const ComplexField& g, double t,
                                   double scale) const;

  ScatteringDatum datum_;
  PhaseTablePtr phase_;
  PotentialSpec spec_;
  GridPtr p_grid_, x_grid_;
  double t2_ = 0.0;
};

}  // namespace nlslab
