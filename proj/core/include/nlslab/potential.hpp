#pragma once

#include <optional>
#include <vector>

#include "nlslab/cutoff.hpp"
#include "nlslab/grid.hpp"

namespace nlslab {

// Inverse-polynomial family amp * <x>^(-rho) with closed-form derivatives
// up to third order. Even in x.
struct PowerDecayPotential {
  double amplitude = 0.0;
  double rho = 0.0;

  double value(double x) const;
  double d1(double x) const;
  double d2(double x) const;
  double d3(double x) const;
  double deriv(double x, int k) const;
};

// Compactly supported rough part: a flat-top spike of the given amplitude on
// [-radius, radius], with one mollified node at each edge so it is an honest
// L2 object at grid scale. Sampled, not closed-form.
struct SingularSpike {
  double amplitude = 0.0;
  double radius = 0.0;

  double sample(double x, double grid_dx) const;
};

// The decomposition V = V_S + V_L + V_C with decay exponents and the cone
// cutoff data (c0, T1, chi).
struct PotentialSpec {
  PowerDecayPotential long_range;   // rho_L > 1/2
  PowerDecayPotential short_range;  // rho_S > 3/2
  SingularSpike singular;
  double c0 = 1.0;
  double T1 = 1.0;

  const CutoffChi& chi() const;
  void validate() const;

  double rho_L() const { return long_range.rho; }
  double rho_S() const { return short_range.rho; }
  // Convention used by all diagnostics that need some rho' < rho_L.
  double rho_L_prime() const { return long_range.rho - 0.05; }

  // Earliest time after which (1 - chi(x/t)) annihilates the singular part.
  double t_singular_cleared() const;

  // Certified bound: |d/dx V_eff(t, .)|_sup <= force_bound_constant() *
  // (t + T1)^(-rho_L - 1) for all t >= 0.
  double force_bound_constant() const;

 private:
  mutable std::optional<CutoffChi> chi_;
};

// Effective time-dependent long-range potential
//   V_eff(t, x) = V_L(x) * (1 - chi(2x / (t + T1))),
// with spatial derivatives up to k = 3 by the product/chain rule in closed
// form. Vanishes identically on |x| <= c0 (t + T1) / 8 and equals V_L for
// |x| >= c0 (t + T1) / 4.
double effective_potential(const PotentialSpec& spec, double t, double x,
                           int k = 0);

// Samples of the full static potential V = V_S + V_L + V_C on a grid.
std::vector<double> sample_total_potential(const PotentialSpec& spec,
                                           const SpatialGrid& grid);

// Multiplication of a physical field by V (real multiplier).
ComplexField assemble_total(const PotentialSpec& spec, const ComplexField& f);

}  // namespace nlslab
