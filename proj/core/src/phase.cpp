#include "nlslab/phase.hpp"

#include <cmath>

namespace nlslab {

namespace {

// Newton with bisection fallback on a monotone increasing scalar map.
template <typename F, typename dF>
double invert_monotone(F&& f, dF&& df, double lo, double hi, double target,
                       double tol) {
  double flo = f(lo) - target, fhi = f(hi) - target;
  if (flo > 0.0 || fhi < 0.0)
    throw WindowError("phase: inversion target outside covered window");
  double x = lo + (hi - lo) * (0.0 - flo) / (fhi - flo);
  for (int it = 0; it < 100; ++it) {
    const double fx = f(x) - target;
    if (fx > 0.0) hi = x; else lo = x;
    const double d = df(x);
    double next = (d > 0.0) ? x - fx / d : 0.5 * (lo + hi);
    if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < tol * (1.0 + std::abs(x))) return next;
    x = next;
  }
  return x;
}

}  // namespace

bool PhaseSlice::in_window(double x) const {
  const double a = std::abs(x);
  return a >= x_min_ && a <= x_max_;
}

double PhaseSlice::invert(double x) const {
  const double a = std::abs(x);
  if (!in_window(x)) throw WindowError("phase slice: |x| outside momentum window");
  return invert_monotone(
      [this](double z) { return t_ * z + pos_corr_(z); },
      [this](double z) { return t_ + pos_corr_.derivative(z); },
      xi_.front(), xi_.back(), a, 1e-12);
}

double PhaseSlice::theta(double x) const {
  const double z = invert(x);
  const double v = z + mom_corr_(z);
  return x >= 0.0 ? v : -v;
}

double PhaseSlice::psi(double x) const {
  const double a = std::abs(x);
  const double z = invert(x);
  const double mom = z + mom_corr_(z);
  const double phi = 0.5 * t_ * z * z + phi_corr_(z);
  return a * mom - phi;
}

double PhaseSlice::psi_xx(double x) const {
  const double z = invert(x);
  const double dmom = 1.0 + mom_corr_.derivative(z);
  const double dpos = t_ + pos_corr_.derivative(z);
  return dmom / dpos;
}

double PhaseSlice::psi_xxx(double x) const {
  const double z = invert(x);
  const double dmom = 1.0 + mom_corr_.derivative(z);
  const double dpos = t_ + pos_corr_.derivative(z);
  const double d2mom = mom_corr_.second_derivative(z);
  const double d2pos = pos_corr_.second_derivative(z);
  const double v = (d2mom * dpos - dmom * d2pos) / (dpos * dpos * dpos);
  return x >= 0.0 ? v : -v;
}

PhaseTable::PhaseTable(BicharTable table, GeneratingTable gf)
    : table_(std::move(table)), gf_(std::move(gf)) {
  // t_grid = {0} then geometric: uniform in log t from index 1.
  log_t_first_ = std::log(table_.t_grid[1]);
  dlog_ = std::log(table_.t_grid[2]) - log_t_first_;
}

void PhaseTable::interp_row(double t, std::vector<double>& pos_c,
                            std::vector<double>& mom_c,
                            std::vector<double>& phi_c) const {
  const std::size_t nt = table_.nt(), nxi = table_.nxi();
  if (t < table_.t_grid[1] || t > table_.s_max * 0.5)
    throw WindowError("phase: t outside the tabulated range");
  // Four-point Lagrange in log t on the geometric part of the grid.
  double u = (std::log(t) - log_t_first_) / dlog_;
  std::size_t i1 = static_cast<std::size_t>(std::floor(u)) + 1;
  i1 = std::min(std::max<std::size_t>(i1, 2), nt - 3);
  const std::size_t base = i1 - 1;
  double w[4];
  {
    double xs[4];
    for (int a = 0; a < 4; ++a) xs[a] = std::log(table_.t_grid[base + a]);
    const double x = std::log(t);
    for (int a = 0; a < 4; ++a) {
      double p = 1.0;
      for (int b = 0; b < 4; ++b)
        if (b != a) p *= (x - xs[b]) / (xs[a] - xs[b]);
      w[a] = p;
    }
  }
  pos_c.assign(nxi, 0.0);
  mom_c.assign(nxi, 0.0);
  phi_c.assign(nxi, 0.0);
  for (int a = 0; a < 4; ++a) {
    const std::size_t row = (base + a) * nxi;
    for (std::size_t m = 0; m < nxi; ++m) {
      pos_c[m] += w[a] * table_.pos_corr[row + m];
      mom_c[m] += w[a] * table_.mom_corr[row + m];
      phi_c[m] += w[a] * gf_.phi_corr[row + m];
    }
  }
}

PhaseSlice PhaseTable::slice(double t) const {
  std::vector<double> pos_c, mom_c, phi_c;
  interp_row(t, pos_c, mom_c, phi_c);
  PhaseSlice s;
  s.t_ = t;
  s.xi_ = table_.xi_grid;
  s.pos_corr_ = CubicSpline(s.xi_, pos_c);
  s.mom_corr_ = CubicSpline(s.xi_, mom_c);
  s.phi_corr_ = CubicSpline(s.xi_, phi_c);
  s.x_min_ = t * s.xi_.front() + pos_c.front();
  s.x_max_ = t * s.xi_.back() + pos_c.back();
  return s;
}

double PhaseTable::generating_s(double t, double xi) const {
  PhaseSlice s = slice(t);
  // eta = inverse of zeta -> Xi(t, zeta) at xi (monotone in zeta)
  const double eta = invert_monotone(
      [&s](double z) { return z + s.mom_corr_(z); },
      [&s](double z) { return 1.0 + s.mom_corr_.derivative(z); },
      s.xi_.front(), s.xi_.back(), std::abs(xi), 1e-12);
  return 0.5 * t * eta * eta + s.phi_corr_(eta);
}

double PhaseTable::hj_residual(double t, std::size_t n_samples, double h_rel) const {
  const double h = h_rel * t;
  PhaseSlice mid = slice(t);
  PhaseSlice lo = slice(t - h);
  PhaseSlice hi = slice(t + h);
  const double x0 = std::max(mid.x_min(), std::max(lo.x_min(), hi.x_min())) * 1.0001;
  const double x1 = std::min(mid.x_max(), std::min(lo.x_max(), hi.x_max())) * 0.9999;
  double worst = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = x0 + (x1 - x0) * static_cast<double>(i) / (n_samples - 1);
    const double dpsi_dt = (hi.psi(x) - lo.psi(x)) / (2.0 * h);
    const double th = mid.theta(x);
    const double r = dpsi_dt + 0.5 * th * th + effective_potential(spec(), t, x, 0);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double PhaseTable::profile_deviation(double t, int k, std::size_t n_samples) const {
  PhaseSlice s = slice(t);
  const double x0 = s.x_min() * 1.0001, x1 = s.x_max() * 0.9999;
  double worst = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = x0 + (x1 - x0) * static_cast<double>(i) / (n_samples - 1);
    double v = 0.0;
    if (k == 1) v = s.theta(x) - x / t;
    else if (k == 2) v = s.psi_xx(x) - 1.0 / t;
    else if (k == 3) v = s.psi_xxx(x);
    else throw ConfigError("profile_deviation: k must be 1, 2 or 3");
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

PhaseTablePtr build_phase(const PotentialSpec& spec, const BicharOptions& opts) {
  BicharTable table = solve_bicharacteristics(spec, opts);
  GeneratingTable gf = build_generating_function(table);
  return std::make_shared<const PhaseTable>(std::move(table), std::move(gf));
}

}  // namespace nlslab
