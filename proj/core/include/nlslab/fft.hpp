#pragma once

#include <complex>
#include <vector>

namespace nlslab::fft {

using cplx = std::complex<double>;

// Unnormalized DFT: out[k] = sum_j in[j] exp(-2*pi*i*j*k/n).
// Plans are cached per size and guarded by a mutex; execution is thread-safe.
// Plans are created with FFTW_ESTIMATE only, so results are deterministic
// across runs on the same platform.
void dft_forward(const std::vector<cplx>& in, std::vector<cplx>& out);

// Unnormalized inverse DFT: out[j] = sum_k in[k] exp(+2*pi*i*j*k/n).
void dft_backward(const std::vector<cplx>& in, std::vector<cplx>& out);

// Chirp-z transform (Bluestein): out[j] = sum_k in[k] * w^(j*k), j = 0..m-1,
// where w = exp(i*alpha). Phase arguments alpha*j*k are reduced in extended
// precision so the result stays accurate for large index products.
std::vector<cplx> czt(const std::vector<cplx>& in, std::size_t m, double alpha);

// exp(i * theta * k) for k = 0..count-1 with extended-precision reduction
// of the accumulated argument.
std::vector<cplx> unit_phases(double theta, std::size_t count);

}  // namespace nlslab::fft
