#include "nlslab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nlslab::fft {

namespace {

std::mutex g_plan_mutex;

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// One in-place unaligned plan pair per size. FFTW_UNALIGNED lets the plan
// execute on any caller buffer through the new-array interface.
PlanPair& plans_for(std::size_t n) {
  static std::map<std::size_t, PlanPair> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<cplx> probe(n);
  auto* p = reinterpret_cast<fftw_complex*>(probe.data());
  PlanPair pp;
  pp.fwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD,
                            FFTW_ESTIMATE | FFTW_UNALIGNED);
  pp.bwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_BACKWARD,
                            FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!pp.fwd || !pp.bwd) throw std::runtime_error("fftw plan creation failed");
  return cache.emplace(n, pp).first->second;
}

void execute(const std::vector<cplx>& in, std::vector<cplx>& out, bool forward) {
  const std::size_t n = in.size();
  if (out.size() != n) out.resize(n);
  if (out.data() != in.data()) std::memcpy(out.data(), in.data(), n * sizeof(cplx));

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    PlanPair& pp = plans_for(n);
    plan = forward ? pp.fwd : pp.bwd;
  }
  auto* p = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(plan, p, p);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// exp(i * theta * m) with the argument reduced modulo 2*pi in long double.
// m can be as large as ~2^40 without losing the ~1e-13 phase accuracy the
// chirp-z resampling needs.
inline cplx phase_of(long double theta, long double m) {
  constexpr long double two_pi = 6.283185307179586476925286766559L;
  long double arg = std::fmodl(theta * m, two_pi);
  return {static_cast<double>(std::cosl(arg)), static_cast<double>(std::sinl(arg))};
}

}  // namespace

void dft_forward(const std::vector<cplx>& in, std::vector<cplx>& out) {
  execute(in, out, true);
}

void dft_backward(const std::vector<cplx>& in, std::vector<cplx>& out) {
  execute(in, out, false);
}

std::vector<cplx> unit_phases(double theta, std::size_t count) {
  std::vector<cplx> ph(count);
  for (std::size_t k = 0; k < count; ++k)
    ph[k] = phase_of(static_cast<long double>(theta), static_cast<long double>(k));
  return ph;
}

std::vector<cplx> czt(const std::vector<cplx>& in, std::size_t m, double alpha) {
  const std::size_t n = in.size();
  if (n == 0 || m == 0) return std::vector<cplx>(m);

  // Bluestein: w^(jk) = w^(j^2/2) * w^(k^2/2) * w^(-(j-k)^2/2).
  const long double half = static_cast<long double>(alpha) / 2.0L;
  const std::size_t kmax = std::max(n, m);
  std::vector<cplx> chirp(kmax);  // chirp[k] = w^(k^2/2)
  for (std::size_t k = 0; k < kmax; ++k) {
    const long double k2 = static_cast<long double>(k) * static_cast<long double>(k);
    chirp[k] = phase_of(half, k2);
  }

  const std::size_t L = next_pow2(n + m - 1);
  std::vector<cplx> a(L), b(L);
  for (std::size_t k = 0; k < n; ++k) a[k] = in[k] * chirp[k];
  // b[j] = conj-chirp at signed offset j, wrapped so the circular convolution
  // of length L reproduces the linear one on the first m outputs.
  for (std::size_t j = 0; j < m; ++j) b[j] = std::conj(chirp[j]);
  for (std::size_t k = 1; k < n; ++k) b[L - k] = std::conj(chirp[k]);

  std::vector<cplx> fa, fb;
  dft_forward(a, fa);
  dft_forward(b, fb);
  for (std::size_t i = 0; i < L; ++i) fa[i] *= fb[i];
  std::vector<cplx> conv;
  dft_backward(fa, conv);
  const double inv = 1.0 / static_cast<double>(L);

  std::vector<cplx> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = conv[j] * inv * chirp[j];
  return out;
}

}  // namespace nlslab::fft
