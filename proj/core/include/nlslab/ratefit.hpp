#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nlslab {

// Least-squares fit of y = C * t^(-alpha) * (log t)^beta in log space.
struct RateFit {
  double log_c = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  bool beta_frozen = false;
  double residual_rms = 0.0;  // log-space
  double t_lo = 0.0, t_hi = 0.0;
  std::size_t n_points = 0;

  double c() const;
  double eval(double t) const;
};

struct Series {
  std::vector<double> t;
  std::vector<double> y;
};

// Fit on the window t >= t_min_fit; requires >= 12 points there and y > 0.
// When freeze_beta is set, only (C, alpha) are fitted.
RateFit fit_rate(const Series& s, std::optional<double> freeze_beta = {},
                 double t_min_fit = 0.0);

struct EnvelopeReport {
  double sup = 0.0;                 // sup of normalized series
  double first_quartile_max = 0.0;  // over the first quarter of the window (log-ordered)
  double last_quartile_max = 0.0;
  bool bounded = false;             // last-quartile max <= first-quartile max * threshold
  double threshold = 1.5;
};

// Normalize y_i by divisor(t_i) and test non-growth of the result:
// the max over the last quartile of points must not exceed the max over
// the first quartile times `threshold`.
EnvelopeReport envelope_check_custom(const Series& s,
                                     const std::function<double(double)>& divisor,
                                     double threshold = 1.5);

// divisor(t) = t^(-alpha) * (log t)^beta, i.e. the normalized series is
// y_i * t_i^alpha * (log t_i)^(-beta).
EnvelopeReport envelope_check(const Series& s, double alpha, double beta,
                              double threshold = 1.5);

struct CheckpointRow {
  double t = 0.0;
  double mass = 0.0;    // ||u||_L2^2
  double energy = 0.0;
  double linf = 0.0;
  double h1 = 0.0;
};

struct ConservationReport {
  double mass_drift = 0.0;    // max relative deviation from the first row
  double energy_drift = 0.0;
  double equiv_c_upper = 0.0; // E + C*mass vs H1^2 sandwich constants
  double equiv_c_lower = 0.0;
  double equiv_shift = 0.0;   // the C used in E + C*mass
  bool equivalent = false;    // lower constant > 0
  double sup_sqrt_t_linf = 0.0;
};

ConservationReport conservation_audit(const std::vector<CheckpointRow>& log);

}  // namespace nlslab
