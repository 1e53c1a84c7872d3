#include "nlslab/propagator.hpp"

#include <cmath>

#include "nlslab/fft.hpp"

namespace nlslab {

double energy(const ComplexField& u, const std::vector<double>& v_samples,
              double lambda) {
  ComplexField ux = spectral_derivative(u, 1);
  const double kin = 0.5 * norm_l2(ux) * norm_l2(ux);
  double pot = 0.0, quart = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double a2 = std::norm(u[j]);
    pot += v_samples[j] * a2;
    quart += a2 * a2;
  }
  const double dx = u.grid->dx();
  return kin + pot * dx + 0.5 * lambda * quart * dx;
}

CheckpointRow checkpoint_row(double t, const ComplexField& u,
                             const std::vector<double>& v_samples, double lambda) {
  CheckpointRow row;
  row.t = t;
  const double l2 = norm_l2(u);
  row.mass = l2 * l2;
  row.energy = energy(u, v_samples, lambda);
  row.linf = norm_linf(u);
  row.h1 = sobolev_norm(u, 1.0, 0.0, 1e300);
  return row;
}

Evolver::Evolver(GridPtr grid, const PotentialSpec& spec, double lambda,
                 SplitMethod method, double dt, double stability_budget)
    : grid_(std::move(grid)), lambda_(lambda), method_(method), dt_(dt) {
  v_ = sample_total_potential(spec, *grid_);
  const double ximax = grid_->xi_max();
  if (std::abs(dt) * ximax * ximax > stability_budget)
    throw ConfigError("evolver: dt * xi_max^2 exceeds the accuracy budget");
  rebuild();
}

void Evolver::set_dt(double dt) {
  if (dt == dt_) return;
  dt_ = dt;
  rebuild();
}

void Evolver::rebuild() {
  const std::size_t n = grid_->n();
  kin_full_.resize(n);
  kin_w0_.resize(n);
  kin_w1_.resize(n);
  // Triple-jump composition coefficients for the fourth-order scheme.
  const double cbrt2 = std::cbrt(2.0);
  const double w1 = 1.0 / (2.0 - cbrt2);
  const double w0 = -cbrt2 / (2.0 - cbrt2);
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = grid_->xi(k);
    const double base = -0.5 * xi * xi;
    kin_full_[k] = std::polar(1.0, base * dt_);
    kin_w0_[k] = std::polar(1.0, base * w0 * dt_);
    kin_w1_[k] = std::polar(1.0, base * w1 * dt_);
  }
}

void Evolver::strang(ComplexField& u, const std::vector<cplx>& kin, double dt) const {
  const double half = -0.5 * dt;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double ph = half * (v_[j] + lambda_ * std::norm(u[j]));
    u[j] *= std::polar(1.0, ph);
  }
  fft::dft_forward(u.values, u.values);
  for (std::size_t k = 0; k < u.size(); ++k) u[k] *= kin[k];
  fft::dft_backward(u.values, u.values);
  const double inv = 1.0 / static_cast<double>(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    u[j] *= inv;
    const double ph = half * (v_[j] + lambda_ * std::norm(u[j]));
    u[j] *= std::polar(1.0, ph);
  }
}

void Evolver::step(ComplexField& u) const {
  if (method_ == SplitMethod::strang) {
    strang(u, kin_full_, dt_);
  } else {
    const double cbrt2 = std::cbrt(2.0);
    const double w1 = 1.0 / (2.0 - cbrt2);
    const double w0 = -cbrt2 / (2.0 - cbrt2);
    strang(u, kin_w1_, w1 * dt_);
    strang(u, kin_w0_, w0 * dt_);
    strang(u, kin_w1_, w1 * dt_);
  }
}

EvolutionState evolve(EvolutionState state, const PotentialSpec& spec,
                      double lambda, double t_target,
                      std::vector<CheckpointRow>* log, const EvolveOptions& opts) {
  const double span = t_target - state.t;
  if (span == 0.0) return state;
  const double dt = (span > 0.0) ? std::abs(state.dt) : -std::abs(state.dt);
  Evolver ev(state.u.grid, spec, lambda, state.method, dt);

  const std::size_t n_steps =
      static_cast<std::size_t>(std::ceil(std::abs(span) / std::abs(dt)));
  const std::size_t log_every = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::round(opts.checkpoint_dt / std::abs(dt))));

  if (log) log->push_back(checkpoint_row(state.t, state.u, ev.potential_samples(), lambda));

  double last_good = state.t;
  for (std::size_t s = 0; s < n_steps; ++s) {
    if (s + 1 == n_steps) {
      const double rem = t_target - state.t;
      ev.set_dt(rem);
      ev.step(state.u);
      state.t = t_target;
    } else {
      ev.step(state.u);
      state.t += dt;
    }

    const bool at_checkpoint = ((s + 1) % log_every == 0) || (s + 1 == n_steps);
    if ((s + 1) % opts.escape_check_every == 0 || at_checkpoint) {
      const double m = norm_l2(state.u);
      if (!std::isfinite(m))
        throw BlowUpError("evolve: non-finite field", last_good);
      if (boundary_mass_fraction(state.u) > opts.escape_tol)
        throw BlowUpError("evolve: boundary mass above escape tolerance", last_good);
      last_good = state.t;
    }
    if (at_checkpoint) {
      if (log)
        log->push_back(checkpoint_row(state.t, state.u, ev.potential_samples(), lambda));
      if (opts.on_checkpoint) opts.on_checkpoint(state.t, state.u);
    }
  }
  return state;
}

double duhamel_residual(const std::vector<ComplexField>& u_nodes, double T,
                        double t, const PotentialSpec& spec, double lambda,
                        double dt_linear) {
  const std::size_t m = u_nodes.size();
  if (m < 3) throw InsufficientDataError("duhamel_residual: need >= 3 nodes");
  const double ds = (t - T) / static_cast<double>(m - 1);

  // Horner sweep: X <- e^{-i ds H} X + w_k F(u_k), so that at the end
  // X = sum_k e^{-i(t - s_k) H} w_k F(u_k) (composite trapezoid), and the
  // linear term rides along in the same transport.
  ComplexField acc = cubic(u_nodes.front(), lambda);
  acc *= cplx(0.5 * ds, 0.0);
  ComplexField lin = u_nodes.front();

  EvolutionState st;
  st.dt = dt_linear;
  st.method = SplitMethod::strang;
  for (std::size_t k = 1; k < m; ++k) {
    st.t = T + ds * static_cast<double>(k - 1);
    st.u = acc;
    acc = evolve(st, spec, 0.0, st.t + ds).u;
    st.t = T + ds * static_cast<double>(k - 1);
    st.u = lin;
    lin = evolve(st, spec, 0.0, st.t + ds).u;
    const double w = (k + 1 == m) ? 0.5 * ds : ds;
    ComplexField f = cubic(u_nodes[k], lambda);
    f *= cplx(w, 0.0);
    acc += f;
  }

  ComplexField rhs = lin;
  for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j] -= cplx(0.0, 1.0) * acc[j];
  ComplexField defect = rhs - u_nodes.back();
  return norm_l2(defect);
}

}  // namespace nlslab
