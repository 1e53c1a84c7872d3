#include "nlslab/datum.hpp"

#include <cmath>

namespace nlslab {

namespace {

// g(s) = exp(1 - 1/(1-s^2)) on |s| < 1, 0 outside; g(0) = 1.
double bump(double s) {
  const double q = 1.0 - s * s;
  if (q <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / q);
}

double bump_d1(double s) {
  const double q = 1.0 - s * s;
  if (q <= 0.0) return 0.0;
  return bump(s) * (-2.0 * s / (q * q));
}

}  // namespace

double ScatteringDatum::uhat(double xi) const {
  const double m = center(), w = halfwidth();
  return epsilon * (bump((xi - m) / w) + bump((xi + m) / w));
}

double ScatteringDatum::duhat(double xi) const {
  const double m = center(), w = halfwidth();
  return epsilon * (bump_d1((xi - m) / w) + bump_d1((xi + m) / w)) / w;
}

void ScatteringDatum::validate() const {
  if (epsilon <= 0.0) throw ConfigError("datum: epsilon must be > 0");
  if (window_hi <= window_lo || window_lo <= 0.0)
    throw ConfigError("datum: need 0 < window_lo < window_hi");
  if (window_lo < c0)
    throw ConfigError("datum: support window not inside {|xi| >= c0}");
}

GridPtr make_profile_grid(std::size_t n, double half_length) {
  return make_grid(n, half_length);
}

ComplexField modulated_datum(const ScatteringDatum& datum, const GridPtr& grid,
                             double t) {
  if (t < 1.0) throw PreconditionError("modulated datum: t must be >= 1", 1.0);
  ComplexField w(grid, Space::physical);
  const double lt = std::log(t);
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double a = datum.uhat(grid->x(j));
    if (a == 0.0) continue;
    const double ph = -datum.lambda * a * a * lt;
    w[j] = a * cplx(std::cos(ph), std::sin(ph));
  }
  return w;
}

ComplexField modulated_datum_dt(const ScatteringDatum& datum, const GridPtr& grid,
                                double t) {
  ComplexField w = modulated_datum(datum, grid, t);
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double a = datum.uhat(grid->x(j));
    w[j] *= cplx(0.0, -datum.lambda * a * a / t);
  }
  return w;
}

}  // namespace nlslab
