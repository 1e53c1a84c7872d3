#include "nlslab/bicharacteristics.hpp"

#include <algorithm>
#include <cmath>

#include "nlslab/quadrature.hpp"

namespace nlslab {

double trajectory_growth_weight(double t, double rho, double T1) {
  if (rho < 1.0) return std::sqrt(1.0 + t * t) * std::pow(t + T1, -rho);
  if (rho == 1.0) return std::log(t / T1 + 2.0);
  return std::pow(T1, 1.0 - rho);
}

double action_growth_weight(double t, double rho, double T1) {
  if (rho < 1.0) return std::max(t, 1.0) * std::pow(t + T1, -rho);
  if (rho == 1.0) return std::log(t / T1 + 1.0) + 1e-300;
  return std::pow(T1, 1.0 - rho);
}

namespace {

std::vector<double> make_time_grid(double t_first, double s_max, double ppd) {
  std::vector<double> t;
  t.push_back(0.0);
  const double step = std::pow(10.0, 1.0 / ppd);
  for (double v = t_first; v < s_max; v *= step) t.push_back(v);
  t.push_back(s_max);
  return t;
}

double derive_s_max(const PotentialSpec& spec, double tail_budget) {
  const double K = spec.force_bound_constant();
  const double rho = spec.rho_L();
  if (K == 0.0) return std::max(10.0 * spec.T1, 100.0);
  // int_s^inf K (u+T1)^(-rho-1) du = (K/rho) (s+T1)^(-rho) <= tail_budget
  const double s = std::pow(K / (rho * tail_budget), 1.0 / rho) - spec.T1;
  return std::max(s, 10.0 * spec.T1);
}

}  // namespace

BicharTable solve_bicharacteristics(const PotentialSpec& spec,
                                    const BicharOptions& opts) {
  spec.validate();
  BicharTable table;
  table.spec = spec;
  table.s_max = opts.s_max > 0.0 ? opts.s_max : derive_s_max(spec, opts.tail_budget);

  const double K = spec.force_bound_constant();
  const double rho = spec.rho_L();
  table.tail_bound =
      K == 0.0 ? 0.0 : (K / rho) * std::pow(table.s_max + spec.T1, -rho);
  if (table.tail_bound > opts.tail_budget * 1.0001)
    throw TailBoundError("bicharacteristics: s_max too small for tail budget",
                         table.tail_bound);

  table.t_grid = make_time_grid(opts.t_first, table.s_max, opts.points_per_decade);
  const double xi_lo = opts.xi_lo > 0.0 ? opts.xi_lo : 0.9 * spec.c0 / 4.0;
  const double xi_hi = opts.xi_hi > xi_lo ? opts.xi_hi : 1.2 * spec.c0 * 4.0;
  table.xi_grid.resize(opts.n_xi);
  for (std::size_t m = 0; m < opts.n_xi; ++m)
    table.xi_grid[m] =
        xi_lo + (xi_hi - xi_lo) * static_cast<double>(m) / (opts.n_xi - 1);

  const std::size_t nt = table.nt(), nxi = table.nxi();
  table.pos_corr.assign(nt * nxi, 0.0);
  table.mom_corr.assign(nt * nxi, 0.0);

  std::vector<double> force(nt), sforce(nt), A, Bpart, new_corr(nt);
  double prev_update = -1.0;
  int consecutive_increases = 0;

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    double update_norm = 0.0;
    for (std::size_t m = 0; m < nxi; ++m) {
      const double xi = table.xi_grid[m];
      for (std::size_t i = 0; i < nt; ++i) {
        const double t = table.t_grid[i];
        const double z = t * xi + table.pos_corr[i * nxi + m];
        force[i] = effective_potential(spec, t, z, 1);
        sforce[i] = t * force[i];
      }
      A = cumulative_integral(table.t_grid, sforce);
      Bpart = cumulative_integral(table.t_grid, force);
      const double Btot = Bpart.back();
      for (std::size_t i = 0; i < nt; ++i) {
        const double t = table.t_grid[i];
        new_corr[i] = A[i] + t * (Btot - Bpart[i]);
      }
      for (std::size_t i = 0; i < nt; ++i) {
        const double w =
            trajectory_growth_weight(table.t_grid[i], rho, spec.T1);
        const double du =
            std::abs(new_corr[i] - table.pos_corr[i * nxi + m]) / std::max(w, 1e-300);
        update_norm = std::max(update_norm, du);
        table.pos_corr[i * nxi + m] = new_corr[i];
      }
    }
    table.update_history.push_back(update_norm);
    table.iterations = iter + 1;
    if (update_norm < opts.update_tol) break;
    if (prev_update >= 0.0 && update_norm > prev_update) {
      if (++consecutive_increases >= 2)
        throw ContractionError("bicharacteristics: iteration expanding (T1 too small)",
                               update_norm / prev_update);
    } else {
      consecutive_increases = 0;
    }
    prev_update = update_norm;
  }
  if (table.update_history.back() >= opts.update_tol)
    throw ContractionError("bicharacteristics: no convergence within max_iters",
                           table.update_history.back());

  // Momentum from the converged positions: Xi(t) = xi + int_t^smax force ds.
  for (std::size_t m = 0; m < nxi; ++m) {
    const double xi = table.xi_grid[m];
    for (std::size_t i = 0; i < nt; ++i) {
      const double t = table.t_grid[i];
      const double z = t * xi + table.pos_corr[i * nxi + m];
      force[i] = effective_potential(spec, t, z, 1);
    }
    Bpart = cumulative_integral(table.t_grid, force);
    const double Btot = Bpart.back();
    for (std::size_t i = 0; i < nt; ++i)
      table.mom_corr[i * nxi + m] = Btot - Bpart[i];
  }

  // Monotonicity of xi -> Z(t, xi) for t > 0 (invertibility of the flow map).
  for (std::size_t i = 1; i < nt; ++i) {
    for (std::size_t m = 0; m + 1 < nxi; ++m) {
      if (table.pos(i, m + 1) <= table.pos(i, m))
        throw InvertibilityError("bicharacteristics: xi -> Z not strictly increasing");
    }
  }
  return table;
}

double find_contracting_t1(PotentialSpec spec, const BicharOptions& opts,
                           double limit) {
  for (double t1 = 1.0; t1 <= limit; t1 *= 2.0) {
    spec.T1 = t1;
    BicharOptions probe = opts;
    probe.max_iters = 80;
    try {
      solve_bicharacteristics(spec, probe);
      return t1;
    } catch (const ContractionError&) {
      continue;
    }
  }
  return 0.0;
}

GeneratingTable build_generating_function(const BicharTable& table) {
  const std::size_t nt = table.nt(), nxi = table.nxi();
  GeneratingTable gf;
  gf.phi_corr.assign(nt * nxi, 0.0);

  // phi(t, xi) = int_0^t ( |Xi|^2/2 + V_eff(tau, Z) + Z * dXi/dtau ) dtau
  // with dXi/dtau = -dV_eff/dx (tau, Z). The free part t xi^2 / 2 is
  // integrated analytically; only the correction is accumulated.
  std::vector<double> integrand(nt), phi;
  for (std::size_t m = 0; m < nxi; ++m) {
    const double xi = table.xi_grid[m];
    for (std::size_t i = 0; i < nt; ++i) {
      const double t = table.t_grid[i];
      const double z = table.pos(i, m);
      const double mom = table.mom(i, m);
      const double w = effective_potential(table.spec, t, z, 1);
      integrand[i] = 0.5 * (mom * mom - xi * xi) +
                     effective_potential(table.spec, t, z, 0) - z * w;
    }
    phi = cumulative_integral(table.t_grid, integrand);
    for (std::size_t i = 0; i < nt; ++i) gf.phi_corr[i * nxi + m] = phi[i];
  }

  // Probe the Legendre identity d/dxi S(t, xi) = Z(t, eta(t, xi)) at table
  // nodes: in the variable xi* = Xi(t, xi_m) the values S = phi(t, xi_m) are
  // exact, so a local degree-6 polynomial derivative in xi* against Z
  // measures only the quadrature defect.
  double worst = 0.0;
  for (std::size_t i = 0; i < nt; ++i) {
    const double t = table.t_grid[i];
    if (t < 2.0 || t > 1.0e3) continue;
    for (std::size_t m = 3; m + 3 < nxi; m += 7) {
      double xs[7], fs[7];
      for (int j = -3; j <= 3; ++j) {
        const std::size_t mm = m + static_cast<std::size_t>(j + 3) - 3;
        xs[j + 3] = table.mom(i, mm);
        fs[j + 3] = 0.5 * t * table.xi_grid[mm] * table.xi_grid[mm] +
                    gf.phi_corr[i * nxi + mm];
      }
      // derivative of the Lagrange interpolant at the center node
      double deriv = 0.0;
      for (int a = 0; a < 7; ++a) {
        double num = 0.0;
        for (int b = 0; b < 7; ++b) {
          if (b == a) continue;
          double prod = 1.0;
          for (int c = 0; c < 7; ++c) {
            if (c == a || c == b) continue;
            prod *= (xs[3] - xs[c]) / (xs[a] - xs[c]);
          }
          num += prod / (xs[a] - xs[b]);
        }
        deriv += fs[a] * num;
      }
      const double z = table.pos(i, m);
      worst = std::max(worst, std::abs(deriv - z) / std::max(1.0, std::abs(z)));
    }
  }
  gf.legendre_residual = worst;
  return gf;
}

}  // namespace nlslab
