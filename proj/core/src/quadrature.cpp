#include "nlslab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlslab {

namespace {

// Exact integral over [x1, x2] of the Lagrange interpolant through
// (xs[i], fs[i]), i in [lo, lo+count).
double lagrange_segment(const std::vector<double>& xs, const std::vector<double>& fs,
                        std::size_t lo, std::size_t count, double x1, double x2) {
  // Integrate each basis polynomial with 4-point Gauss (exact for degree <= 7).
  static const double gx[4] = {-0.8611363115940526, -0.3399810435848563,
                               0.3399810435848563, 0.8611363115940526};
  static const double gw[4] = {0.3478548451374538, 0.6521451548625461,
                               0.6521451548625461, 0.3478548451374538};
  const double mid = 0.5 * (x1 + x2), half = 0.5 * (x2 - x1);
  double acc = 0.0;
  for (int q = 0; q < 4; ++q) {
    const double x = mid + half * gx[q];
    double p = 0.0;
    for (std::size_t i = lo; i < lo + count; ++i) {
      double li = 1.0;
      for (std::size_t j = lo; j < lo + count; ++j) {
        if (i == j) continue;
        li *= (x - xs[j]) / (xs[i] - xs[j]);
      }
      p += li * fs[i];
    }
    acc += gw[q] * p;
  }
  return acc * half;
}

}  // namespace

std::vector<double> cumulative_integral(const std::vector<double>& ts,
                                        const std::vector<double>& fs) {
  const std::size_t n = ts.size();
  if (fs.size() != n) throw std::invalid_argument("cumulative_integral: size mismatch");
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t lo, count;
    if (n < 4) {
      lo = 0;
      count = n;
    } else if (i == 0) {
      lo = 0;
      count = 4;
    } else if (i + 2 >= n) {
      lo = n - 4;
      count = 4;
    } else {
      lo = i - 1;
      count = 4;
    }
    out[i + 1] = out[i] + lagrange_segment(ts, fs, lo, count, ts[i], ts[i + 1]);
  }
  return out;
}

namespace {
// 32-point Gauss-Legendre abscissas/weights on [-1, 1] (positive half).
const double kGL32X[16] = {
    0.0483076656877383162, 0.1444719615827964934, 0.2392873622521370745,
    0.3318686022821276498, 0.4213512761306353454, 0.5068999089322293900,
    0.5877157572407623290, 0.6630442669302152010, 0.7321821187402896804,
    0.7944837959679424070, 0.8493676137325699701, 0.8963211557660521240,
    0.9349060759377396892, 0.9647622555875064308, 0.9856115115452683354,
    0.9972638618494815635};
const double kGL32W[16] = {
    0.0965400885147278006, 0.0956387200792748594, 0.0938443990808045654,
    0.0911738786957638847, 0.0876520930044038111, 0.0833119242269467552,
    0.0781938957870703065, 0.0723457941088485062, 0.0658222227763618468,
    0.0586840934785355471, 0.0509980592623761762, 0.0428358980222266807,
    0.0342738629130214331, 0.0253920653092620595, 0.0162743947309056706,
    0.0070186100094700966};
}  // namespace

void gauss_legendre_32_nodes(double a, double b, double* nodes, double* weights) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  int idx = 0;
  for (int i = 15; i >= 0; --i, ++idx) {
    nodes[idx] = mid - half * kGL32X[i];
    weights[idx] = half * kGL32W[i];
  }
  for (int i = 0; i < 16; ++i, ++idx) {
    nodes[idx] = mid + half * kGL32X[i];
    weights[idx] = half * kGL32W[i];
  }
}

double gauss_legendre_32(double a, double b, const double* fvals) {
  double nodes[32], weights[32];
  gauss_legendre_32_nodes(a, b, nodes, weights);
  double s = 0.0;
  for (int i = 0; i < 32; ++i) s += weights[i] * fvals[i];
  return s;
}

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  const std::size_t n = xs_.size();
  if (n < 2 || ys_.size() != n)
    throw std::invalid_argument("CubicSpline: need >= 2 nodes");
  m_.assign(n, 0.0);
  if (n == 2) return;
  // Tridiagonal solve for natural spline second derivatives.
  std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = xs_[i] - xs_[i - 1];
    const double h1 = xs_[i + 1] - xs_[i];
    a[i] = h0 / 6.0;
    b[i] = (h0 + h1) / 3.0;
    c[i] = h1 / 6.0;
    d[i] = (ys_[i + 1] - ys_[i]) / h1 - (ys_[i] - ys_[i - 1]) / h0;
  }
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    m_[i] = (d[i] - c[i] * (i + 2 < n ? m_[i + 1] : 0.0)) / b[i];
    if (i == 1) break;
  }
}

std::size_t CubicSpline::locate(double x) const {
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  if (i == 0) return 0;
  if (i >= xs_.size()) return xs_.size() - 2;
  return i - 1;
}

double CubicSpline::operator()(double x) const {
  const std::size_t i = locate(x);
  const double h = xs_[i + 1] - xs_[i];
  const double A = (xs_[i + 1] - x) / h, B = (x - xs_[i]) / h;
  return A * ys_[i] + B * ys_[i + 1] +
         ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double x) const {
  const std::size_t i = locate(x);
  const double h = xs_[i + 1] - xs_[i];
  const double A = (xs_[i + 1] - x) / h, B = (x - xs_[i]) / h;
  return (ys_[i + 1] - ys_[i]) / h +
         ((1.0 - 3.0 * A * A) * m_[i] + (3.0 * B * B - 1.0) * m_[i + 1]) * h / 6.0;
}

double CubicSpline::second_derivative(double x) const {
  const std::size_t i = locate(x);
  const double h = xs_[i + 1] - xs_[i];
  const double A = (xs_[i + 1] - x) / h, B = (x - xs_[i]) / h;
  return A * m_[i] + B * m_[i + 1];
}

}  // namespace nlslab
