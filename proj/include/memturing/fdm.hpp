#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "memturing/grid.hpp"
#include "memturing/model.hpp"
#include "memturing/params.hpp"
#include "memturing/tridiagonal.hpp"

namespace memturing::fdm {

enum class Species { U, V };

/// Values of one species, left block then right block.
struct Field {
  Species species = Species::U;
  std::vector<double> values;
};

/// A x^{n+1} = B x^n + dt F^n for one species.
struct StepOperator {
  Species species = Species::U;
  Tridiagonal lhs;
  Tridiagonal rhs;
  /// D_l dt / dx^2 and D_r dt / dx^2 (mu for u, sigma for v).
  double ratio_l = 0.0;
  double ratio_r = 0.0;
  /// dt k / dx.
  double kappa = 0.0;
};

/// Theta-method matrices with the Neumann and membrane ghost points
/// eliminated. Both matrices have unit row and column sums.
StepOperator assemble(const ModelParams& p, Species species);

enum class StepMode { Nonlinear, Linearized };

struct State {
  std::vector<double> U;
  std::vector<double> V;
};

/// Both species' operators, assembled and factorised once.
class Stepper {
 public:
  Stepper(const ModelParams& p, const model::SteadyState& equilibrium);

  const ModelParams& params() const { return params_; }
  const Grid& grid() const { return grid_; }
  const StepOperator& op_u() const { return op_u_; }
  const StepOperator& op_v() const { return op_v_; }
  const model::SteadyState& equilibrium() const { return equilibrium_; }

  /// One theta-method step in place with the reaction taken at time n. In
  /// linearized mode the reaction is the equilibrium Jacobian applied to the
  /// deviation. Throws BlowUpError carrying `step_index` when the new state is
  /// not finite.
  void advance(State& state, StepMode mode, std::size_t step_index = 0) const;

 private:
  ModelParams params_;
  model::SteadyState equilibrium_;
  Grid grid_;
  StepOperator op_u_;
  StepOperator op_v_;
  TridiagonalFactor factor_u_;
  TridiagonalFactor factor_v_;
};

/// One step on a copy of `state`.
State step(const State& state, const Stepper& stepper, StepMode mode);

struct Snapshot {
  double t = 0.0;
  State state;
};

struct SimResult {
  std::vector<Snapshot> snapshots;
  /// dx sum(U + V) at t = 0 followed by one entry per snapshot.
  std::vector<double> mass_series;
  Snapshot final;
  bool converged = false;
  std::size_t steps = 0;
  /// |u_r - u_l| and |v_r - v_l| across the membrane in the final state.
  double jump_u = 0.0;
  double jump_v = 0.0;
};

struct RunOptions {
  StepMode mode = StepMode::Nonlinear;
  /// Steady when max|state^{n+1} - state^n| / dt drops below this.
  double steady_tolerance = 1e-8;
  bool stop_when_steady = true;
};

/// Snapshot times T/64, T/32, ..., T.
std::vector<double> snapshot_times(double T);

/// Integrates to T or until steady. After convergence the remaining
/// snapshots repeat the final state.
SimResult run(const ModelParams& p, const State& initial, double T,
              const model::SteadyState& equilibrium, const RunOptions& options = {});

/// dx sum(U + V).
double discrete_mass(std::span<const double> U, std::span<const double> V, double dx);

/// max - min over the left (or right) block.
double side_variation(std::span<const double> values, const Grid& grid, bool left);

/// Sign changes of values - reference, skipping exact zeros. The membrane
/// pair is adjacent in the sequence, so a crossing hidden in the jump counts.
int sign_changes(std::span<const double> values, double reference);
int sign_changes_side(std::span<const double> values, double reference, const Grid& grid,
                      bool left);

}  // namespace memturing::fdm
