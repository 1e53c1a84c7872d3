#pragma once

#include <memory>

#include "nlslab/bicharacteristics.hpp"
#include "nlslab/quadrature.hpp"

namespace nlslab {

class PhaseTable;

// Phase data at one time level. Construction interpolates the trajectory
// tables along t; evaluation inverts the monotone map xi -> Z(t, xi) by
// bisection bracketing plus Newton polish (tolerance 1e-12 in xi) and uses
//   psi(t, x) = x * Xi(t, zeta) - phi(t, zeta),   Z(t, zeta) = x,
// whose x-derivative collapses to Xi(t, zeta) exactly. All quantities are
// even/odd in x as appropriate; only |x| is looked up.
class PhaseSlice {
 public:
  double t() const { return t_; }
  double x_min() const { return x_min_; }  // window: x_min <= |x| <= x_max
  double x_max() const { return x_max_; }
  bool in_window(double x) const;

  double theta(double x) const;    // d/dx psi
  double psi(double x) const;
  double psi_xx(double x) const;
  double psi_xxx(double x) const;  // diagnostics; noisier than k <= 2
  double a1(double x) const { return theta(x) - x / t_; }
  double a2(double x) const { return 0.5 * (psi_xx(x) - 1.0 / t_); }

  // Momentum label zeta solving Z(t, zeta) = |x|.
  double invert(double x) const;

 private:
  friend class PhaseTable;
  double t_ = 0.0, x_min_ = 0.0, x_max_ = 0.0;
  std::vector<double> xi_;
  CubicSpline pos_corr_, mom_corr_, phi_corr_;  // corrections vs zeta
};

// Wraps the trajectory and action tables into an evaluator for the phase
// and its spatial derivatives at arbitrary (t, x) inside the covered
// momentum window, t in [t_first, s_max / 2].
class PhaseTable {
 public:
  PhaseTable(BicharTable table, GeneratingTable gf);

  const BicharTable& bichar() const { return table_; }
  const GeneratingTable& generating() const { return gf_; }
  const PotentialSpec& spec() const { return table_.spec; }
  double xi_lo() const { return table_.xi_grid.front(); }
  double xi_hi() const { return table_.xi_grid.back(); }

  PhaseSlice slice(double t) const;

  // S(t, xi) = phi(t, eta(t, xi)) with eta the inverse of xi -> Xi(t, xi).
  double generating_s(double t, double xi) const;

  // sup over the in-window sample range of
  //   d/dt psi + |d/dx psi|^2 / 2 + V_eff(t, x),
  // with the time derivative by centered differences at relative step h_rel.
  double hj_residual(double t, std::size_t n_samples = 257,
                     double h_rel = 1e-3) const;

  // sup_x |d^k/dx^k (psi - x^2/(2t))| over the window at time t, k = 1 or 2.
  double profile_deviation(double t, int k, std::size_t n_samples = 257) const;

 private:
  void interp_row(double t, std::vector<double>& pos_c,
                  std::vector<double>& mom_c, std::vector<double>& phi_c) const;

  BicharTable table_;
  GeneratingTable gf_;
  std::size_t geo_begin_ = 1;  // index of t_first in t_grid
  double log_t_first_ = 0.0, dlog_ = 0.0;
};

using PhaseTablePtr = std::shared_ptr<const PhaseTable>;

// Convenience: solve trajectories, build the action table, wrap.
PhaseTablePtr build_phase(const PotentialSpec& spec, const BicharOptions& opts = {});

}  // namespace nlslab
