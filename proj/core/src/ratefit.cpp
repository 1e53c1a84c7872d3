#include "nlslab/ratefit.hpp"

#include <array>
#include <cmath>

#include "nlslab/errors.hpp"

namespace nlslab {

double RateFit::c() const { return std::exp(log_c); }

double RateFit::eval(double t) const {
  return std::exp(log_c - alpha * std::log(t) + beta * std::log(std::log(t)));
}

namespace {

// Solve the k x k symmetric normal system by Gaussian elimination with
// partial pivoting (k <= 3).
void solve_small(std::array<std::array<double, 4>, 3>& m, int k) {
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    if (m[col][col] == 0.0) throw InsufficientDataError("fit_rate: singular normal system");
    for (int r = col + 1; r < k; ++r) {
      const double w = m[r][col] / m[col][col];
      for (int c = col; c <= k; ++c) m[r][c] -= w * m[col][c];
    }
  }
  for (int col = k - 1; col >= 0; --col) {
    for (int r = 0; r < col; ++r) {
      const double w = m[r][col] / m[col][col];
      m[r][col] -= w * m[col][col];
      m[r][k] -= w * m[col][k];
    }
    m[col][k] /= m[col][col];
    m[col][col] = 1.0;
  }
}

}  // namespace

RateFit fit_rate(const Series& s, std::optional<double> freeze_beta,
                 double t_min_fit) {
  std::vector<double> lt, llt, ly;
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    if (s.t[i] < t_min_fit) continue;
    if (i > 0 && s.t[i] <= s.t[i - 1])
      throw InsufficientDataError("fit_rate: t must be strictly increasing");
    if (!(s.y[i] > 0.0))
      throw InsufficientDataError("fit_rate: series values must be positive");
    lt.push_back(std::log(s.t[i]));
    llt.push_back(std::log(std::log(s.t[i])));
    ly.push_back(std::log(s.y[i]));
  }
  const std::size_t n = lt.size();
  if (n < 12)
    throw InsufficientDataError("fit_rate: fewer than 12 points in fit window");

  RateFit fit;
  fit.n_points = n;
  fit.t_lo = std::exp(lt.front());
  fit.t_hi = std::exp(lt.back());

  // model: ly = p0 - p1 * lt (+ p2 * llt)
  const int k = freeze_beta ? 2 : 3;
  std::array<std::array<double, 4>, 3> m{};
  auto basis = [&](std::size_t i, int j) -> double {
    if (j == 0) return 1.0;
    if (j == 1) return -lt[i];
    return llt[i];
  };
  for (std::size_t i = 0; i < n; ++i) {
    double target = ly[i];
    if (freeze_beta) target -= *freeze_beta * llt[i];
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) m[r][c] += basis(i, r) * basis(i, c);
      m[r][k] += basis(i, r) * target;
    }
  }
  solve_small(m, k);
  fit.log_c = m[0][3];
  fit.alpha = m[1][3];
  fit.beta = freeze_beta ? *freeze_beta : m[2][3];
  fit.beta_frozen = freeze_beta.has_value();

  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pred = fit.log_c - fit.alpha * lt[i] + fit.beta * llt[i];
    rss += (ly[i] - pred) * (ly[i] - pred);
  }
  fit.residual_rms = std::sqrt(rss / static_cast<double>(n));
  return fit;
}

EnvelopeReport envelope_check_custom(const Series& s,
                                     const std::function<double(double)>& divisor,
                                     double threshold) {
  if (s.t.size() < 4 || s.t.size() != s.y.size())
    throw InsufficientDataError("envelope_check: need at least 4 points");
  EnvelopeReport rep;
  rep.threshold = threshold;
  const std::size_t n = s.t.size();
  const std::size_t q = n / 4;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = s.y[i] / divisor(s.t[i]);
    rep.sup = std::max(rep.sup, z);
    if (i < q) rep.first_quartile_max = std::max(rep.first_quartile_max, z);
    if (i >= n - q) rep.last_quartile_max = std::max(rep.last_quartile_max, z);
  }
  rep.bounded = rep.last_quartile_max <= rep.first_quartile_max * threshold;
  return rep;
}

EnvelopeReport envelope_check(const Series& s, double alpha, double beta,
                              double threshold) {
  return envelope_check_custom(
      s,
      [alpha, beta](double t) {
        return std::pow(t, -alpha) * std::pow(std::log(t), beta);
      },
      threshold);
}

ConservationReport conservation_audit(const std::vector<CheckpointRow>& log) {
  if (log.empty()) throw InsufficientDataError("conservation_audit: empty log");
  ConservationReport rep;
  const double m0 = log.front().mass;
  const double e0 = log.front().energy;
  const double escale = std::max(std::abs(e0), 1e-30);
  double min_e_over_m = 0.0;
  for (const auto& row : log) {
    rep.mass_drift = std::max(rep.mass_drift, std::abs(row.mass - m0) / m0);
    rep.energy_drift = std::max(rep.energy_drift, std::abs(row.energy - e0) / escale);
    rep.sup_sqrt_t_linf =
        std::max(rep.sup_sqrt_t_linf, std::sqrt(std::abs(row.t)) * row.linf);
    if (row.mass > 0.0)
      min_e_over_m = std::min(min_e_over_m, row.energy / row.mass);
  }
  // E + C * mass is comparable to the squared H1 norm once C clears the
  // negative part of E/mass.
  rep.equiv_shift = 1.0 + 2.0 * std::max(0.0, -min_e_over_m);
  rep.equiv_c_lower = 1e300;
  for (const auto& row : log) {
    const double num = row.energy + rep.equiv_shift * row.mass;
    const double den = row.h1 * row.h1;
    if (den <= 0.0) continue;
    rep.equiv_c_lower = std::min(rep.equiv_c_lower, num / den);
    rep.equiv_c_upper = std::max(rep.equiv_c_upper, num / den);
  }
  rep.equivalent = rep.equiv_c_lower > 0.0 && rep.equiv_c_lower < 1e300;
  return rep;
}

}  // namespace nlslab
