#pragma once

#include <cstddef>
#include <vector>

namespace nlslab {

// Cumulative integral of samples (ts, fs) from ts[0] to every node, using a
// local cubic through the four nodes around each interval (quadratic at the
// ends). Fourth-order on smooth data, stable on geometrically graded meshes.
std::vector<double> cumulative_integral(const std::vector<double>& ts,
                                        const std::vector<double>& fs);

// 32-point Gauss-Legendre rule mapped to [a, b].
double gauss_legendre_32(double a, double b, const double* fvals);
void gauss_legendre_32_nodes(double a, double b, double* nodes, double* weights);

template <typename Fn>
double gauss_legendre_32(double a, double b, Fn&& fn) {
  double nodes[32], weights[32], vals[32];
  gauss_legendre_32_nodes(a, b, nodes, weights);
  double s = 0.0;
  for (int i = 0; i < 32; ++i) {
    vals[i] = fn(nodes[i]);
    s += weights[i] * vals[i];
  }
  return s;
}

// Natural cubic spline on strictly increasing nodes; evaluation clamps to
// the covered interval.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;
  bool empty() const { return xs_.empty(); }
  double x_front() const { return xs_.front(); }
  double x_back() const { return xs_.back(); }

 private:
  std::size_t locate(double x) const;
  std::vector<double> xs_, ys_, m_;  // m_: second derivatives at nodes
};

}  // namespace nlslab
