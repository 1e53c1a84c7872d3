#include "nlslab/profile.hpp"

#include <cmath>

namespace nlslab {

ComplexField asymptotic_profile(const ScatteringDatum& datum,
                                const PhaseSlice& slice, double t,
                                const GridPtr& x_grid) {
  if (t < 1.0) throw PreconditionError("asymptotic_profile: t must be >= 1", 1.0);
  ComplexField u(x_grid, Space::physical);
  const cplx pref = dilation_prefactor(t);
  const double lt = std::log(t);
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double x = x_grid->x(j);
    const double a = datum.uhat(x / t);
    if (a == 0.0) continue;  // exact zero off the datum support
    const double ph = slice.psi(x) - datum.lambda * a * a * lt;
    u[j] = pref * a * cplx(std::cos(ph), std::sin(ph));
  }
  return u;
}

ComplexField asymptotic_profile(const ScatteringDatum& datum,
                                const PhaseTable& phase, double t,
                                const GridPtr& x_grid) {
  if (t < std::max(1.0, phase.spec().T1))
    throw PreconditionError("asymptotic_profile: t must be >= max(1, T1)",
                            std::max(1.0, phase.spec().T1));
  return asymptotic_profile(datum, phase.slice(t), t, x_grid);
}

ComplexField free_leading_profile(const ScatteringDatum& datum, double t,
                                  const GridPtr& x_grid) {
  ComplexField u(x_grid, Space::physical);
  const cplx pref = dilation_prefactor(t);
  const double inv2t = 0.5 / t;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double x = x_grid->x(j);
    const double a = datum.uhat(x / t);
    if (a == 0.0) continue;
    const double ph = x * x * inv2t;
    u[j] = pref * a * cplx(std::cos(ph), std::sin(ph));
  }
  return u;
}

ProfileSnapshot profile_snapshot(const ScatteringDatum& datum,
                                 const PhaseTable& phase, double t,
                                 const GridPtr& x_grid, const GridPtr& p_grid) {
  ProfileSnapshot snap;
  snap.t = t;
  snap.u_p = asymptotic_profile(datum, phase, t, x_grid);
  snap.w = modulated_datum(datum, p_grid, t);
  return snap;
}

cplx cubic(cplx z, double lambda) { return lambda * std::norm(z) * z; }

ComplexField cubic(const ComplexField& f, double lambda) {
  ComplexField out = f;
  for (auto& v : out.values) v *= lambda * std::norm(v);
  return out;
}

cplx g_remainder(cplx z, cplx z0, double lambda) {
  const double re = std::real(z * z0);
  return 2.0 * lambda * re * z + lambda * std::norm(z) * z0 +
         lambda * std::norm(z) * z;
}

ComplexField g_remainder(const ComplexField& v, const ComplexField& u_p,
                         double lambda) {
  require_same_grid(v, u_p);
  ComplexField out = v;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = g_remainder(v[i], u_p[i], lambda);
  return out;
}

CubicSplit taylor_split(cplx z1, cplx z0, double lambda) {
  CubicSplit s;
  const cplx z = z1 - z0;
  s.base = cubic(z0, lambda);
  s.linear = 2.0 * lambda * std::norm(z0) * z;
  s.conj_linear = lambda * z0 * z0 * std::conj(z);
  s.rest = g_remainder(z, z0, lambda);
  return s;
}

double profile_ode_residual(const ScatteringDatum& datum, const GridPtr& grid,
                            double t, double fd_dt) {
  if (t < 2.0) throw PreconditionError("profile_ode_residual: t must be >= 2", 2.0);
  ComplexField w = modulated_datum(datum, grid, t);
  ComplexField dw(grid, Space::physical);
  if (fd_dt <= 0.0) {
    dw = modulated_datum_dt(datum, grid, t);
  } else {
    ComplexField hi = modulated_datum(datum, grid, t + fd_dt);
    ComplexField lo = modulated_datum(datum, grid, t - fd_dt);
    for (std::size_t j = 0; j < dw.size(); ++j)
      dw[j] = (hi[j] - lo[j]) / (2.0 * fd_dt);
  }
  ComplexField rhs = cubic(w, datum.lambda);
  ComplexField res(grid, Space::physical);
  for (std::size_t j = 0; j < res.size(); ++j)
    res[j] = cplx(0.0, 1.0) * dw[j] - rhs[j] / t;
  return norm_l2(res);
}

}  // namespace nlslab
