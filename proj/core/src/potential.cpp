#include "nlslab/potential.hpp"

#include <cmath>

namespace nlslab {

double PowerDecayPotential::value(double x) const {
  if (amplitude == 0.0) return 0.0;
  return amplitude * std::pow(1.0 + x * x, -0.5 * rho);
}

double PowerDecayPotential::d1(double x) const {
  if (amplitude == 0.0) return 0.0;
  const double s = 1.0 + x * x;
  return -amplitude * rho * x * std::pow(s, -0.5 * (rho + 2.0));
}

double PowerDecayPotential::d2(double x) const {
  if (amplitude == 0.0) return 0.0;
  const double s = 1.0 + x * x;
  return -amplitude * rho *
         (std::pow(s, -0.5 * (rho + 2.0)) -
          (rho + 2.0) * x * x * std::pow(s, -0.5 * (rho + 4.0)));
}

double PowerDecayPotential::d3(double x) const {
  if (amplitude == 0.0) return 0.0;
  const double s = 1.0 + x * x;
  return amplitude * rho * (rho + 2.0) *
         (3.0 * x * std::pow(s, -0.5 * (rho + 4.0)) -
          (rho + 4.0) * x * x * x * std::pow(s, -0.5 * (rho + 6.0)));
}

double PowerDecayPotential::deriv(double x, int k) const {
  switch (k) {
    case 0: return value(x);
    case 1: return d1(x);
    case 2: return d2(x);
    case 3: return d3(x);
    default: throw ConfigError("potential derivative order must be <= 3");
  }
}

double SingularSpike::sample(double x, double grid_dx) const {
  if (amplitude == 0.0 || radius <= 0.0) return 0.0;
  const double a = std::abs(x);
  if (a <= radius - grid_dx) return amplitude;
  if (a >= radius + grid_dx) return 0.0;
  // single-cell linear ramp: rough but square-integrable
  return amplitude * 0.5 * (1.0 - (a - radius) / grid_dx);
}

const CutoffChi& PotentialSpec::chi() const {
  if (!chi_) chi_.emplace(c0);
  return *chi_;
}

void PotentialSpec::validate() const {
  if (c0 <= 0.0) throw ConfigError("potential: c0 must be > 0");
  if (T1 < 1.0) throw ConfigError("potential: T1 must be >= 1");
  if (long_range.amplitude != 0.0 && long_range.rho <= 0.5)
    throw ConfigError("potential: rho_L must be > 1/2");
  if (short_range.amplitude != 0.0 && short_range.rho <= 1.5)
    throw ConfigError("potential: rho_S must be > 3/2");
  if (singular.amplitude != 0.0 && singular.radius <= 0.0)
    throw ConfigError("potential: singular part needs a positive support radius");
}

double PotentialSpec::t_singular_cleared() const {
  if (singular.amplitude == 0.0 || singular.radius <= 0.0) return 0.0;
  // chi(x/t) == 1 for |x| <= c0 t / 4, so (1 - chi_t) V_C vanishes once
  // radius < c0 t / 4.
  return 4.0 * singular.radius / c0 * 1.05;
}

double PotentialSpec::force_bound_constant() const {
  if (long_range.amplitude == 0.0) return 0.0;
  const double A = std::abs(long_range.amplitude);
  const double rho = long_range.rho;
  const double base = c0 / 8.0;  // support of (1 - chi(2x/(t+T1))): |x| >= base*(t+T1)
  // |V_L'| <= A rho <x>^(-rho-1) and the chi' term contributes
  // 2 |V_L| |chi'|_sup / (t+T1) on |x| >= base (t+T1).
  const double c1 = A * rho * std::pow(base, -rho - 1.0);
  const double c2 = 2.0 * A * chi().sup_d1() * std::pow(base, -rho);
  return c1 + c2;
}

double effective_potential(const PotentialSpec& spec, double t, double x, int k) {
  if (t < 0.0) throw PreconditionError("effective_potential: t must be >= 0", 0.0);
  if (spec.long_range.amplitude == 0.0) return 0.0;
  const CutoffChi& chi = spec.chi();
  const double a = 2.0 / (t + spec.T1);
  const double u = a * x;

  if (std::abs(u) <= chi.inner()) return 0.0;  // plateau: exact zero
  if (std::abs(u) >= chi.outer()) return spec.long_range.deriv(x, k);

  const double g0 = 1.0 - chi.value(u);
  switch (k) {
    case 0:
      return spec.long_range.value(x) * g0;
    case 1:
      return spec.long_range.d1(x) * g0 - spec.long_range.value(x) * chi.d1(u) * a;
    case 2:
      return spec.long_range.d2(x) * g0 - 2.0 * spec.long_range.d1(x) * chi.d1(u) * a -
             spec.long_range.value(x) * chi.d2(u) * a * a;
    case 3:
      return spec.long_range.d3(x) * g0 - 3.0 * spec.long_range.d2(x) * chi.d1(u) * a -
             3.0 * spec.long_range.d1(x) * chi.d2(u) * a * a -
             spec.long_range.value(x) * chi.d3(u) * a * a * a;
    default:
      throw ConfigError("effective_potential: derivative order must be <= 3");
  }
}

std::vector<double> sample_total_potential(const PotentialSpec& spec,
                                           const SpatialGrid& grid) {
  std::vector<double> v(grid.n());
  for (std::size_t j = 0; j < grid.n(); ++j) {
    const double x = grid.x(j);
    v[j] = spec.short_range.value(x) + spec.long_range.value(x) +
           spec.singular.sample(x, grid.dx());
  }
  return v;
}

ComplexField assemble_total(const PotentialSpec& spec, const ComplexField& f) {
  if (f.space != Space::physical)
    throw GridMismatchError("assemble_total: field must be physical");
  ComplexField out = f;
  const auto v = sample_total_potential(spec, *f.grid);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] *= v[j];
  return out;
}

}  // namespace nlslab
