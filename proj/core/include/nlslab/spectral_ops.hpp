#pragma once

#include "nlslab/grid.hpp"

namespace nlslab {

enum class Direction { forward, inverse };

// Unitary Fourier transform with the (2*pi)^(-1/2) exp(-i*x*xi) kernel,
// realized by a scaled FFT plus the boundary phase (-1)^k that accounts for
// the domain starting at -L. forward maps physical -> spectral samples at
// the grid's xi-nodes; inverse maps back. inverse(forward(f)) == f up to
// round-off.
ComplexField fourier(const ComplexField& f, Direction direction);

// || <xi>^s F[<x>^r f] ||_L2. The <x>^r weight is applied in physical space,
// <xi>^s after the transform. Requires f physical with |f| below
// `boundary_tol * max(1, |f|_inf)` at the domain edge, else TruncationError.
// s = r = 0 returns the plain L2 norm bit-for-bit.
double sobolev_norm(const ComplexField& f, double s, double r,
                    double boundary_tol = 1e-12);

// Band-limited evaluation of a physical field at m equispaced points
// y_j = y0 + j*h via chirp-z. Points outside [-L, L) of the source grid are
// not evaluated; the caller decides how to treat them.
std::vector<cplx> resample_equispaced(const ComplexField& f, double y0,
                                      double h, std::size_t m);

// D(t) f (x) = (i t)^(-1/2) f(x/t), resampled onto `target` by band-limited
// interpolation. Requires |t| >= 1. Target points with |x/t| beyond the
// source domain are set to zero; if the source field carries magnitude above
// `trunc_tol * max(1,|f|_inf)` at its boundary a TruncationError is thrown.
ComplexField dilate(const ComplexField& f, double t, const GridPtr& target,
                    double trunc_tol = 1e-12);

// M(t) f (x) = exp(i x^2 / (2 t)) f(x).
ComplexField modulate(const ComplexField& f, double t);

// exp(i * phi(x)) * f(x) for a real-valued sampled phase on the same grid.
ComplexField phase_multiply(const ComplexField& f, const std::vector<double>& phi);

// R(t) = F (M(t) - 1) F^{-1}. Conjugating the unimodular chirp by the
// transform gives exp(i H0 / t) - 1, a plain spectral multiplier
// exp(i xi^2/(2t)) - 1, which is how it is evaluated here.
ComplexField r_operator(const ComplexField& f, double t);

// Spectral derivative d^k/dx^k via the (i xi)^k multiplier.
ComplexField spectral_derivative(const ComplexField& f, int order = 1);

// exp(-i t H0) with H0 = -(1/2) d^2/dx^2: multiplier exp(-i t xi^2 / 2).
ComplexField free_propagate(const ComplexField& f, double t);

// (i t)^(-1/2), principal branch.
cplx dilation_prefactor(double t);

}  // namespace nlslab
