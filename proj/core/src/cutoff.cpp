#include "nlslab/cutoff.hpp"

#include <cmath>

#include "nlslab/errors.hpp"
#include "nlslab/quadrature.hpp"

namespace nlslab {

CutoffChi::CutoffChi(double c0) : c0_(c0) {
  if (c0 <= 0.0) throw ConfigError("cutoff: c0 must be > 0");
  a_ = c0 / 4.0;
  b_ = c0 / 3.0;
  norm_ = gauss_legendre_32(a_, b_, [this](double u) { return bump(u); });
  // Transition-layer derivative bounds, used for certified tail estimates.
  const int kScan = 2048;
  for (int i = 0; i <= kScan; ++i) {
    const double u = a_ + (b_ - a_) * static_cast<double>(i) / kScan;
    sup_d1_ = std::max(sup_d1_, std::abs(bump(u) / norm_));
    sup_d2_ = std::max(sup_d2_, std::abs(bump_d1(u) / norm_));
  }
}

double CutoffChi::bump(double u) const {
  if (u <= a_ || u >= b_) return 0.0;
  return std::exp(-1.0 / ((u - a_) * (b_ - u)));
}

double CutoffChi::bump_d1(double u) const {
  if (u <= a_ || u >= b_) return 0.0;
  const double r = (u - a_) * (b_ - u);
  const double rp = (a_ + b_) - 2.0 * u;
  // d/du exp(-1/r) = exp(-1/r) * r'/r^2
  return bump(u) * rp / (r * r);
}

double CutoffChi::bump_d2(double u) const {
  if (u <= a_ || u >= b_) return 0.0;
  const double r = (u - a_) * (b_ - u);
  const double rp = (a_ + b_) - 2.0 * u;
  // psi = -1/r, psi' = r'/r^2, psi'' = (r'' r - 2 r'^2)/r^3 with r'' = -2.
  const double psi1 = rp / (r * r);
  const double psi2 = (-2.0 * r - 2.0 * rp * rp) / (r * r * r);
  return bump(u) * (psi1 * psi1 + psi2);
}

double CutoffChi::value(double x) const {
  const double u = std::abs(x);
  if (u <= a_) return 1.0;
  if (u >= b_) return 0.0;
  const double partial = gauss_legendre_32(a_, u, [this](double v) { return bump(v); });
  return 1.0 - partial / norm_;
}

double CutoffChi::d1(double x) const {
  const double u = std::abs(x);
  if (u <= a_ || u >= b_) return 0.0;
  const double sgn = (x >= 0.0) ? 1.0 : -1.0;
  return -sgn * bump(u) / norm_;
}

double CutoffChi::d2(double x) const {
  const double u = std::abs(x);
  if (u <= a_ || u >= b_) return 0.0;
  return -bump_d1(u) / norm_;  // even function: sign^2 = 1
}

double CutoffChi::d3(double x) const {
  const double u = std::abs(x);
  if (u <= a_ || u >= b_) return 0.0;
  const double sgn = (x >= 0.0) ? 1.0 : -1.0;
  return -sgn * bump_d2(u) / norm_;
}

}  // namespace nlslab
