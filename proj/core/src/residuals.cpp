#include "nlslab/residuals.hpp"

#include <cmath>

namespace nlslab {

ResidualBuilder::ResidualBuilder(ScatteringDatum datum, PhaseTablePtr phase,
                                 PotentialSpec spec, GridPtr profile_grid,
                                 GridPtr x_grid)
    : datum_(std::move(datum)),
      phase_(std::move(phase)),
      spec_(std::move(spec)),
      p_grid_(std::move(profile_grid)),
      x_grid_(std::move(x_grid)) {
  t2_ = spec_.t_singular_cleared();
}

// M_psi D [(1-chi) g] * scale for a profile-grid field g. The (1-chi) factor
// vanishes identically for |x/t| <= c0/4, which keeps every phase lookup
// inside the covered momentum window.
ComplexField ResidualBuilder::masked_profile_term(const ComplexField& g, double t,
                                                  double scale) const {
  const CutoffChi& chi = spec_.chi();
  ComplexField cut = g;
  for (std::size_t j = 0; j < cut.size(); ++j) {
    const double y = cut.grid->x(j);
    cut[j] *= (1.0 - chi.value(y));
  }
  ComplexField dil = dilate(cut, t, x_grid_);
  PhaseSlice slice = phase_->slice(t);
  ComplexField out(x_grid_, Space::physical);
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (dil[j] == cplx{0.0, 0.0}) continue;
    const double x = x_grid_->x(j);
    if (std::abs(x / t) <= chi.inner()) continue;  // exact zero under the cutoff
    const double ps = slice.psi(x);
    out[j] = scale * dil[j] * cplx(std::cos(ps), std::sin(ps));
  }
  return out;
}

ComplexField ResidualBuilder::e1(double t) const {
  if (t < spec_.T1)
    throw PreconditionError("residual e1: t must be >= T1", spec_.T1);
  ComplexField w = modulated_datum(datum_, p_grid_, t);
  ComplexField rw = r_operator(w, t);
  return masked_profile_term(rw, t, 1.0);
}

ComplexField ResidualBuilder::e2(double t) const {
  if (t < spec_.T1)
    throw PreconditionError("residual e2: t must be >= T1", spec_.T1);
  ComplexField w = modulated_datum(datum_, p_grid_, t);
  ComplexField rfw = r_operator(cubic(w, datum_.lambda), t);
  return masked_profile_term(rfw, t, -1.0 / t);
}

ComplexField ResidualBuilder::cutoff_dollard_image(const ComplexField& g,
                                                   double t) const {
  const CutoffChi& chi = spec_.chi();
  ComplexField q = g + r_operator(g, t);  // FMF^{-1} g
  ComplexField dil = dilate(q, t, x_grid_);
  PhaseSlice slice = phase_->slice(t);
  ComplexField out(x_grid_, Space::physical);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double x = x_grid_->x(j);
    const double c = chi.value(x / t);
    if (c == 1.0 || dil[j] == cplx{0.0, 0.0}) continue;
    const double ps = slice.psi(x);
    out[j] = (1.0 - c) * dil[j] * cplx(std::cos(ps), std::sin(ps));
  }
  return out;
}

ResidualBundle ResidualBuilder::bundle(double t) const {
  if (t <= t2_)
    throw PreconditionError("residual bundle: t must exceed the cutoff clearing time",
                            t2_);
  if (t < spec_.T1)
    throw PreconditionError("residual bundle: t must be >= T1", spec_.T1);

  const CutoffChi& chi = spec_.chi();
  PhaseSlice slice = phase_->slice(t);

  ComplexField w = modulated_datum(datum_, p_grid_, t);
  ComplexField q = w + r_operator(w, t);                 // FMF^{-1} w
  ComplexField qp = spectral_derivative(q, 1);           // its derivative
  ComplexField dq = dilate(q, t, x_grid_);               // (it)^{-1/2} q(x/t)
  ComplexField dqp = dilate(qp, t, x_grid_);

  ResidualBundle b;
  b.t = t;
  b.e1 = e1(t);
  b.e2 = e2(t);
  b.i1 = ComplexField(x_grid_, Space::physical);
  b.i2 = ComplexField(x_grid_, Space::physical);
  b.i3 = ComplexField(x_grid_, Space::physical);
  b.i4 = ComplexField(x_grid_, Space::physical);
  b.e3 = ComplexField(x_grid_, Space::physical);

  const double inv_t = 1.0 / t;
  const double inv_t2 = inv_t * inv_t;
  for (std::size_t j = 0; j < x_grid_->n(); ++j) {
    const double x = x_grid_->x(j);
    const double y = x * inv_t;
    const double c = chi.value(y);
    const double c1 = chi.d1(y);
    const double c2 = chi.d2(y);
    const bool inert = (c == 1.0 && c1 == 0.0 && c2 == 0.0);
    if (inert) continue;
    if (dq[j] == cplx{0.0, 0.0} && dqp[j] == cplx{0.0, 0.0}) continue;

    const double ps = slice.psi(x);
    const cplx ephase(std::cos(ps), std::sin(ps));
    const double theta = slice.theta(x);
    const double a1 = theta - y;
    const double a2 = 0.5 * (slice.psi_xx(x) - inv_t);

    const cplx pw = ephase * dq[j];                        // M_psi D q
    const cplx dpw = ephase * (cplx(0.0, theta) * dq[j] + dqp[j] * inv_t);

    b.i1[j] = cplx(0.0, -1.0) * (1.0 - c) * ephase *
              (a1 * dqp[j] * inv_t + a2 * dq[j]);
    b.i2[j] = -(cplx(0.0, inv_t * a1 * c1) + cplx(0.5 * inv_t2 * c2, 0.0)) * pw;
    b.i3[j] = -c1 * inv_t2 * dpw;
    const double vs = spec_.short_range.value(x) +
                      spec_.singular.sample(x, x_grid_->dx());
    b.i4[j] = (1.0 - c) * vs * pw;
    b.e3[j] = b.i1[j] + b.i2[j] + b.i3[j] + b.i4[j];
  }

  b.e1_h1 = sobolev_norm(b.e1, 1.0, 0.0, 1e300);
  b.e2_h1 = sobolev_norm(b.e2, 1.0, 0.0, 1e300);
  b.e3_h1 = sobolev_norm(b.e3, 1.0, 0.0, 1e300);
  b.i1_h1 = sobolev_norm(b.i1, 1.0, 0.0, 1e300);
  b.i2_h1 = sobolev_norm(b.i2, 1.0, 0.0, 1e300);
  b.i3_h1 = sobolev_norm(b.i3, 1.0, 0.0, 1e300);
  b.i4_h1 = sobolev_norm(b.i4, 1.0, 0.0, 1e300);
  return b;
}

}  // namespace nlslab
