#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "nlslab/errors.hpp"

namespace nlslab {

using cplx = std::complex<double>;

// Uniform periodic grid on [-L, L) with its paired frequency grid.
// Nodes x_j = -L + j*dx contain 0 at j = n/2. Frequencies are stored in
// FFT order: xi_k = (pi/L) * k for k < n/2 and (pi/L) * (k - n) otherwise,
// so dxi = pi/L and n * dx * dxi = 2*pi (the transform pair is unitary).
class SpatialGrid {
 public:
  SpatialGrid(std::size_t n_points, double half_length);

  std::size_t n() const { return n_; }
  double half_length() const { return L_; }
  double dx() const { return dx_; }
  double dxi() const { return dxi_; }
  double x(std::size_t j) const { return x_[j]; }
  double xi(std::size_t k) const { return xi_[k]; }
  const std::vector<double>& x_nodes() const { return x_; }
  const std::vector<double>& xi_nodes() const { return xi_; }
  double xi_max() const { return dxi_ * static_cast<double>(n_ / 2); }

  bool same_as(const SpatialGrid& other) const {
    return n_ == other.n_ && L_ == other.L_;
  }

 private:
  std::size_t n_;
  double L_, dx_, dxi_;
  std::vector<double> x_, xi_;
};

using GridPtr = std::shared_ptr<const SpatialGrid>;

GridPtr make_grid(std::size_t n_points, double half_length);

enum class Space { physical, spectral };

// Complex samples of a field on a SpatialGrid, either at the x-nodes
// (physical) or at the xi-nodes in FFT order (spectral).
struct ComplexField {
  GridPtr grid;
  std::vector<cplx> values;
  Space space = Space::physical;

  ComplexField() = default;
  ComplexField(GridPtr g, Space s = Space::physical)
      : grid(std::move(g)), values(grid->n(), cplx{0.0, 0.0}), space(s) {}

  std::size_t size() const { return values.size(); }
  cplx& operator[](std::size_t i) { return values[i]; }
  const cplx& operator[](std::size_t i) const { return values[i]; }

  // Integration weight of the current representation.
  double weight() const {
    return space == Space::physical ? grid->dx() : grid->dxi();
  }
  // Node coordinate in the current representation.
  double node(std::size_t i) const {
    return space == Space::physical ? grid->x(i) : grid->xi(i);
  }
};

void require_same_grid(const ComplexField& a, const ComplexField& b);

// Riemann-sum norms with the representation's weight.
double norm_l2(const ComplexField& f);
double norm_linf(const ComplexField& f);
double norm_l4(const ComplexField& f);
double inner_real(const ComplexField& a, const ComplexField& b);  // Re<a,b>

// Pointwise helpers (same grid and space required where two fields meet).
ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(const ComplexField& a, cplx scale);
ComplexField& operator+=(ComplexField& a, const ComplexField& b);
ComplexField& operator-=(ComplexField& a, const ComplexField& b);
ComplexField& operator*=(ComplexField& a, cplx scale);

// Multiply samples by a real function of the node coordinate.
template <typename Fn>
ComplexField apply_real_multiplier(const ComplexField& f, Fn&& fn) {
  ComplexField out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= fn(out.node(i));
  return out;
}

// Largest |f| over the outermost `frac` portion of nodes on each side.
double boundary_magnitude(const ComplexField& f, double frac = 0.01);

// L2 mass fraction carried by the outermost `frac` portion of nodes.
double boundary_mass_fraction(const ComplexField& f, double frac = 0.01);

}  // namespace nlslab
