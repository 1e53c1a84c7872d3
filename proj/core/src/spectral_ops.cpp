#include "nlslab/spectral_ops.hpp"

#include <cmath>

#include "nlslab/fft.hpp"

namespace nlslab {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310005024;

void alternate_signs(std::vector<cplx>& v) {
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
}
}  // namespace

ComplexField fourier(const ComplexField& f, Direction direction) {
  const auto& g = *f.grid;
  ComplexField out(f.grid, direction == Direction::forward ? Space::spectral
                                                           : Space::physical);
  if (direction == Direction::forward) {
    if (f.space != Space::physical)
      throw GridMismatchError("fourier(forward): field must be physical");
    fft::dft_forward(f.values, out.values);
    alternate_signs(out.values);
    const double scale = g.dx() / kSqrt2Pi;
    for (auto& v : out.values) v *= scale;
  } else {
    if (f.space != Space::spectral)
      throw GridMismatchError("fourier(inverse): field must be spectral");
    std::vector<cplx> tmp = f.values;
    alternate_signs(tmp);
    fft::dft_backward(tmp, out.values);
    const double scale = g.dxi() / kSqrt2Pi;
    for (auto& v : out.values) v *= scale;
  }
  return out;
}

double sobolev_norm(const ComplexField& f, double s, double r,
                    double boundary_tol) {
  if (f.space != Space::physical)
    throw GridMismatchError("sobolev_norm: field must be physical");
  if (s == 0.0 && r == 0.0) return norm_l2(f);

  const double bmag = boundary_magnitude(f);
  const double scale = std::max(1.0, norm_linf(f));
  if (bmag > boundary_tol * scale)
    throw TruncationError("sobolev_norm: field not decayed at domain boundary", bmag);

  ComplexField weighted = f;
  if (r != 0.0) {
    for (std::size_t j = 0; j < weighted.size(); ++j) {
      const double x = weighted.grid->x(j);
      weighted[j] *= std::pow(1.0 + x * x, 0.5 * r);
    }
  }
  ComplexField hat = fourier(weighted, Direction::forward);
  double acc = 0.0;
  for (std::size_t k = 0; k < hat.size(); ++k) {
    const double xi = hat.grid->xi(k);
    const double w = std::pow(1.0 + xi * xi, s);
    acc += w * std::norm(hat[k]);
  }
  return std::sqrt(acc * hat.grid->dxi());
}

std::vector<cplx> resample_equispaced(const ComplexField& f, double y0,
                                      double h, std::size_t m) {
  if (f.space != Space::physical)
    throw GridMismatchError("resample: field must be physical");
  const auto& g = *f.grid;
  ComplexField hat = fourier(f, Direction::forward);

  // f(y) = (2 pi)^(-1/2) * dxi * sum_k hat_k exp(i y xi_k)
  //      = prefac(j) * sum_kappa b_kappa w^(j kappa)
  // after shifting FFT order to contiguous kappa = k_signed + n/2 and
  // splitting exp(i (kappa - n/2) dxi (y0 + j h)).
  const std::size_t n = g.n();
  const std::size_t half = n / 2;
  const double dxi = g.dxi();
  std::vector<cplx> b(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = g.xi(k);
    const std::size_t kappa =
        (k < half) ? k + half : k - half;  // sort spectrum ascending in xi
    const cplx e = cplx(std::cos(xi * y0), std::sin(xi * y0));
    b[kappa] = hat[k] * e * (dxi / kSqrt2Pi);
  }
  std::vector<cplx> s = fft::czt(b, m, dxi * h);
  // prefactor exp(-i (n/2) dxi j h)
  std::vector<cplx> pre = fft::unit_phases(-static_cast<double>(half) * dxi * h, m);
  for (std::size_t j = 0; j < m; ++j) s[j] *= pre[j];
  return s;
}

cplx dilation_prefactor(double t) {
  return std::pow(cplx(0.0, t), cplx(-0.5, 0.0));
}

ComplexField dilate(const ComplexField& f, double t, const GridPtr& target,
                    double trunc_tol) {
  if (std::abs(t) < 1.0)
    throw PreconditionError("dilate: |t| must be >= 1", 1.0);
  const auto& src = *f.grid;
  const auto& tgt = *target;

  ComplexField out(target, Space::physical);
  const double h = tgt.dx() / t;
  const double y_first = tgt.x(0) / t;

  // Contiguous index range whose sample points y = x/t stay inside the
  // source domain. Outside it the field is treated as zero.
  const double edge = src.half_length() - src.dx();
  std::size_t j0 = tgt.n(), j1 = 0;
  for (std::size_t j = 0; j < tgt.n(); ++j) {
    const double y = y_first + h * static_cast<double>(j);
    if (std::abs(y) <= edge) {
      j0 = std::min(j0, j);
      j1 = std::max(j1, j);
    }
  }
  if (j0 > j1) return out;  // disjoint domains: zero field

  if (j0 > 0 || j1 + 1 < tgt.n()) {
    const double bmag = boundary_magnitude(f);
    const double scale = std::max(1.0, norm_linf(f));
    if (bmag > trunc_tol * scale)
      throw TruncationError("dilate: resample outside support of a non-decayed field",
                            bmag);
  }

  const std::size_t m = j1 - j0 + 1;
  std::vector<cplx> vals =
      resample_equispaced(f, y_first + h * static_cast<double>(j0), h, m);
  const cplx pref = dilation_prefactor(t);
  for (std::size_t j = 0; j < m; ++j) out[j0 + j] = pref * vals[j];
  return out;
}

ComplexField modulate(const ComplexField& f, double t) {
  if (t == 0.0) throw PreconditionError("modulate: t must be nonzero", 0.0);
  ComplexField out = f;
  const double inv2t = 0.5 / t;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = out.node(i);
    const double a = x * x * inv2t;
    out[i] *= cplx(std::cos(a), std::sin(a));
  }
  return out;
}

ComplexField phase_multiply(const ComplexField& f, const std::vector<double>& phi) {
  if (phi.size() != f.size())
    throw GridMismatchError("phase_multiply: phase length mismatch");
  ComplexField out = f;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] *= cplx(std::cos(phi[i]), std::sin(phi[i]));
  return out;
}

ComplexField r_operator(const ComplexField& f, double t) {
  if (t == 0.0) throw PreconditionError("r_operator: t must be nonzero", 0.0);
  ComplexField hat = fourier(f, Direction::forward);
  const double inv2t = 0.5 / t;
  for (std::size_t k = 0; k < hat.size(); ++k) {
    const double xi = hat.grid->xi(k);
    const double a = xi * xi * inv2t;
    hat[k] *= cplx(std::cos(a) - 1.0, std::sin(a));
  }
  return fourier(hat, Direction::inverse);
}

ComplexField spectral_derivative(const ComplexField& f, int order) {
  ComplexField hat = fourier(f, Direction::forward);
  for (std::size_t k = 0; k < hat.size(); ++k) {
    const cplx ixi(0.0, hat.grid->xi(k));
    cplx m{1.0, 0.0};
    for (int p = 0; p < order; ++p) m *= ixi;
    hat[k] *= m;
  }
  return fourier(hat, Direction::inverse);
}

ComplexField free_propagate(const ComplexField& f, double t) {
  ComplexField hat = fourier(f, Direction::forward);
  for (std::size_t k = 0; k < hat.size(); ++k) {
    const double xi = hat.grid->xi(k);
    const double a = -0.5 * t * xi * xi;
    hat[k] *= cplx(std::cos(a), std::sin(a));
  }
  return fourier(hat, Direction::inverse);
}

}  // namespace nlslab
