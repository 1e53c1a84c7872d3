#pragma once

#include <functional>

#include "nlslab/potential.hpp"
#include "nlslab/profile.hpp"
#include "nlslab/ratefit.hpp"
#include "nlslab/spectral_ops.hpp"

namespace nlslab {

enum class SplitMethod { strang, fourth_order };

// Conserved energy of the flow i u_t = -u_xx/2 + V u + lambda |u|^2 u:
//   E(u) = |u_x|^2/2 + <V u, u> + (lambda/2) |u|_L4^4.
double energy(const ComplexField& u, const std::vector<double>& v_samples,
              double lambda);

CheckpointRow checkpoint_row(double t, const ComplexField& u,
                             const std::vector<double>& v_samples, double lambda);

// Split-step evolution operator with precomputed kinetic multipliers and
// potential samples. Every substep is a unimodular multiplier, so each step
// preserves the discrete L2 norm to round-off and step(-dt) undoes step(dt)
// exactly up to round-off.
class Evolver {
 public:
  Evolver(GridPtr grid, const PotentialSpec& spec, double lambda,
          SplitMethod method, double dt, double stability_budget = 0.5);

  void step(ComplexField& u) const;  // advance by the configured (signed) dt
  void set_dt(double dt);
  double dt() const { return dt_; }
  double lambda() const { return lambda_; }
  const std::vector<double>& potential_samples() const { return v_; }
  const GridPtr& grid() const { return grid_; }

 private:
  void strang(ComplexField& u, const std::vector<cplx>& kin, double dt) const;
  void rebuild();

  GridPtr grid_;
  std::vector<double> v_;
  double lambda_;
  SplitMethod method_;
  double dt_ = 0.0;
  std::vector<cplx> kin_full_, kin_w0_, kin_w1_;
};

struct EvolutionState {
  double t = 0.0;
  ComplexField u;
  double dt = 5e-3;
  SplitMethod method = SplitMethod::strang;
};

struct EvolveOptions {
  double checkpoint_dt = 5.0;
  double escape_tol = 1e-10;    // boundary L2 mass fraction triggering abort
  std::size_t escape_check_every = 200;
  std::function<void(double, const ComplexField&)> on_checkpoint;
};

// March `state` to t_target with fixed steps (final partial step adjusted),
// appending conservation rows at checkpoint spacing. NaN or boundary escape
// raises BlowUpError carrying the last good time.
EvolutionState evolve(EvolutionState state, const PotentialSpec& spec,
                      double lambda, double t_target,
                      std::vector<CheckpointRow>* log = nullptr,
                      const EvolveOptions& opts = {});

// L2 defect of u(t) against the propagated integral representation
//   u(t) = e^{-i(t-T)H} u(T) - i int_T^t e^{-i(t-s)H} F(u(s)) ds
// evaluated from uniformly spaced samples u_nodes on [T, t] by composite
// trapezoid, transporting with linear (lambda = 0) split steps of dt_linear.
double duhamel_residual(const std::vector<ComplexField>& u_nodes, double T,
                        double t, const PotentialSpec& spec, double lambda,
                        double dt_linear = 5e-3);

}  // namespace nlslab
