#pragma once

#include <cstdint>
#include <vector>

#include "nlslab/potential.hpp"

namespace nlslab {

// Weight used for the contraction metric and the growth envelopes of the
// trajectory corrections: <t> (t+T1)^(-rho) for rho < 1,
// log(t/T1 + 2) at rho == 1, and a T1-scaled constant for rho > 1.
double trajectory_growth_weight(double t, double rho, double T1);

// t (t+T1)^(-rho) for rho < 1, log(t/T1 + 1) at rho == 1 (the analogous
// weight for the generating-function correction).
double action_growth_weight(double t, double rho, double T1);

struct BicharOptions {
  double xi_lo = 0.0;            // positive momentum window (0 -> derive from c0)
  double xi_hi = 0.0;
  std::size_t n_xi = 480;
  double points_per_decade = 32.0;
  double t_first = 0.25;
  double s_max = 0.0;            // 0 -> derived from the tail budget
  double tail_budget = 1e-10;
  double update_tol = 1e-10;
  int max_iters = 200;
};

// Classical trajectories (pos, mom) = (Z, Xi) launched from the origin with
// prescribed asymptotic momentum xi, tabulated on a log-spaced time grid for
// a uniform grid of positive xi. The potential's long-range part is even, so
// negative momenta follow by reflection. Stored as corrections to the free
// stream (Z - t xi, Xi - xi), which makes the free case exact.
struct BicharTable {
  PotentialSpec spec;
  std::vector<double> t_grid;    // {0} then geometric from t_first to s_max
  std::vector<double> xi_grid;   // uniform, positive
  std::vector<double> pos_corr;  // [it * n_xi + m]: Z - t xi
  std::vector<double> mom_corr;  // [it * n_xi + m]: Xi - xi
  double s_max = 0.0;
  double tail_bound = 0.0;       // certified bound on the dropped force tail
  std::vector<double> update_history;
  int iterations = 0;

  std::size_t nt() const { return t_grid.size(); }
  std::size_t nxi() const { return xi_grid.size(); }
  double pos(std::size_t it, std::size_t m) const {
    return t_grid[it] * xi_grid[m] + pos_corr[it * nxi() + m];
  }
  double mom(std::size_t it, std::size_t m) const {
    return xi_grid[m] + mom_corr[it * nxi() + m];
  }
};

// Solve the terminal-momentum trajectory problem as the fixed point of
//   Z(t,xi) = t xi + int_0^inf min{t,s} dV_eff/dx (s, Z(s,xi)) ds,
// the improper integral truncated at s_max with a certified tail bound.
// The iteration must contract (update norms, measured in the
// trajectory_growth_weight metric, eventually decrease monotonically);
// two consecutive increases raise ContractionError ("T1 too small").
BicharTable solve_bicharacteristics(const PotentialSpec& spec,
                                    const BicharOptions& opts = {});

// Smallest T1 among {1, 2, 4, ...} <= limit for which the iteration
// contracts, or 0 if none found. Diagnostic only.
double find_contracting_t1(PotentialSpec spec, const BicharOptions& opts = {},
                           double limit = 4096.0);

// Action integral along the trajectories: phi(t, xi) accumulated on the
// table's time grid, stored as the correction phi - t xi^2 / 2.
struct GeneratingTable {
  std::vector<double> phi_corr;     // [it * n_xi + m]
  double legendre_residual = 0.0;   // sup |d/dxi S(t,xi) - Z(t, eta(t,xi))| probed
};

GeneratingTable build_generating_function(const BicharTable& table);

}  // namespace nlslab
