#include "nlslab/grid.hpp"

#include <cmath>

namespace nlslab {

SpatialGrid::SpatialGrid(std::size_t n_points, double half_length)
    : n_(n_points), L_(half_length) {
  if (n_ == 0 || n_ % 2 != 0) throw ConfigError("grid: n_points must be positive and even");
  if (L_ <= 0.0) throw ConfigError("grid: half_length must be > 0");
  dx_ = 2.0 * L_ / static_cast<double>(n_);
  dxi_ = M_PI / L_;
  x_.resize(n_);
  xi_.resize(n_);
  for (std::size_t j = 0; j < n_; ++j)
    x_[j] = -L_ + static_cast<double>(j) * dx_;
  const std::size_t half = n_ / 2;
  for (std::size_t k = 0; k < n_; ++k) {
    const double sk = (k < half) ? static_cast<double>(k)
                                 : static_cast<double>(k) - static_cast<double>(n_);
    xi_[k] = dxi_ * sk;
  }
}

GridPtr make_grid(std::size_t n_points, double half_length) {
  return std::make_shared<const SpatialGrid>(n_points, half_length);
}

void require_same_grid(const ComplexField& a, const ComplexField& b) {
  if (!a.grid || !b.grid || !a.grid->same_as(*b.grid))
    throw GridMismatchError("fields live on different grids");
  if (a.space != b.space)
    throw GridMismatchError("fields are in different spaces");
}

double norm_l2(const ComplexField& f) {
  double s = 0.0;
  for (const cplx& v : f.values) s += std::norm(v);
  return std::sqrt(s * f.weight());
}

double norm_linf(const ComplexField& f) {
  double m = 0.0;
  for (const cplx& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double norm_l4(const ComplexField& f) {
  double s = 0.0;
  for (const cplx& v : f.values) {
    const double a2 = std::norm(v);
    s += a2 * a2;
  }
  return std::pow(s * f.weight(), 0.25);
}

double inner_real(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::real(std::conj(b[i]) * a[i]);
  return s * a.weight();
}

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  ComplexField out = a;
  out += b;
  return out;
}

ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  ComplexField out = a;
  out -= b;
  return out;
}

ComplexField operator*(const ComplexField& a, cplx scale) {
  ComplexField out = a;
  out *= scale;
  return out;
}

ComplexField& operator+=(ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

ComplexField& operator-=(ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

ComplexField& operator*=(ComplexField& a, cplx scale) {
  for (auto& v : a.values) v *= scale;
  return a;
}

double boundary_magnitude(const ComplexField& f, double frac) {
  const std::size_t n = f.size();
  const std::size_t w = std::max<std::size_t>(1, static_cast<std::size_t>(frac * n));
  double m = 0.0;
  for (std::size_t i = 0; i < w; ++i) {
    m = std::max(m, std::abs(f[i]));
    m = std::max(m, std::abs(f[n - 1 - i]));
  }
  return m;
}

double boundary_mass_fraction(const ComplexField& f, double frac) {
  const std::size_t n = f.size();
  const std::size_t w = std::max<std::size_t>(1, static_cast<std::size_t>(frac * n));
  double edge = 0.0, total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += std::norm(f[i]);
  for (std::size_t i = 0; i < w; ++i)
    edge += std::norm(f[i]) + std::norm(f[n - 1 - i]);
  return total > 0.0 ? edge / total : 0.0;
}

}  // namespace nlslab
