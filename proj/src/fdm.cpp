#include "memturing/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "memturing/errors.hpp"

namespace memturing::fdm {

StepOperator assemble(const ModelParams& p, Species species) {
  const Grid grid = build_grid(p);
  const bool is_u = species == Species::U;
  const double D_l = is_u ? p.D_ul() : p.D_vl;
  const double D_r = is_u ? p.D_ur() : p.D_vr;
  const double k = is_u ? p.k_u : p.k_v;
  const double dx = grid.dx;
  const double th = p.Theta_scheme;
  const double th_e = 1.0 - th;

  StepOperator op;
  op.species = species;
  op.ratio_l = D_l * p.dt / (dx * dx);
  op.ratio_r = D_r * p.dt / (dx * dx);
  op.kappa = p.dt * k / dx;

  const std::size_t n = grid.size();
  const auto [ml, mr] = grid.membrane_index();
  op.lhs = Tridiagonal(n);
  op.rhs = Tridiagonal(n);
  Tridiagonal& A = op.lhs;
  Tridiagonal& B = op.rhs;

  for (std::size_t i = 0; i < n; ++i) {
    const double mu = i <= ml ? op.ratio_l : op.ratio_r;
    double left = mu;   // coupling to i-1
    double right = mu;  // coupling to i+1
    if (i == 0) left = 0.0;
    if (i + 1 == n) right = 0.0;
    if (i == ml) right = op.kappa;
    if (i == mr) left = op.kappa;
    // Ghost elimination turns the missing Neumann/membrane neighbour into a
    // diagonal term, so each row's off-diagonal weights sum to its diagonal excess.
    A.lower[i] = -th * left;
    A.upper[i] = -th * right;
    A.diag[i] = 1.0 + th * (left + right);
    B.lower[i] = th_e * left;
    B.upper[i] = th_e * right;
    B.diag[i] = 1.0 - th_e * (left + right);
  }
  return op;
}

Stepper::Stepper(const ModelParams& p, const model::SteadyState& equilibrium)
    : params_(p),
      equilibrium_(equilibrium),
      grid_(build_grid(p)),
      op_u_(assemble(p, Species::U)),
      op_v_(assemble(p, Species::V)),
      factor_u_(op_u_.lhs),
      factor_v_(op_v_.lhs) {}

void Stepper::advance(State& state, StepMode mode, std::size_t step_index) const {
  const std::size_t n = grid_.size();
  if (state.U.size() != n || state.V.size() != n) throw DomainError("step: state does not match the grid");

  std::vector<double> rhs_u(n);
  std::vector<double> rhs_v(n);
  op_u_.rhs.multiply(state.U, rhs_u);
  op_v_.rhs.multiply(state.V, rhs_v);

  const double dt = params_.dt;
  const model::Jacobian& J = equilibrium_.jac;
  for (std::size_t i = 0; i < n; ++i) {
    double f;
    double g;
    if (mode == StepMode::Nonlinear) {
      const model::Reaction r = model::reaction(state.U[i], state.V[i], params_.eps, params_.alpha);
      f = r.f;
      g = r.g;
    } else {
      const double du = state.U[i] - equilibrium_.u_bar;
      const double dv = state.V[i] - equilibrium_.v_bar;
      f = J.fu * du + J.fv * dv;
      g = J.gu * du + J.gv * dv;
    }
    rhs_u[i] += dt * f;
    rhs_v[i] += dt * g;
  }

  factor_u_.solve(rhs_u, state.U);
  factor_v_.solve(rhs_v, state.V);

  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(state.U[i]) || !std::isfinite(state.V[i])) {
      throw BlowUpError(step_index, "non-finite value at cell " + std::to_string(i));
    }
  }
}

State step(const State& state, const Stepper& stepper, StepMode mode) {
  State next = state;
  stepper.advance(next, mode);
  return next;
}

std::vector<double> snapshot_times(double T) {
  std::vector<double> times;
  for (int k = 6; k >= 0; --k) times.push_back(T / static_cast<double>(1 << k));
  return times;
}

double discrete_mass(std::span<const double> U, std::span<const double> V, double dx) {
  double sum = 0.0;
  for (std::size_t i = 0; i < U.size(); ++i) sum += U[i] + V[i];
  return dx * sum;
}

SimResult run(const ModelParams& p, const State& initial, double T, const model::SteadyState& equilibrium,
              const RunOptions& options) {
  if (!(T > 0)) throw DomainError("run: T must be > 0");
  const Stepper stepper(p, equilibrium);
  const double dx = stepper.grid().dx;
  const double dt = p.dt;

  SimResult result;
  State state = initial;
  result.mass_series.push_back(discrete_mass(state.U, state.V, dx));

  const std::vector<double> times = snapshot_times(T);
  std::vector<std::size_t> snapshot_steps;
  for (double t : times) snapshot_steps.push_back(std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(t / dt))));
  const std::size_t total = snapshot_steps.back();

  std::size_t next = 0;
  State previous;
  std::size_t n = 0;
  while (n < total) {
    previous = state;
    stepper.advance(state, options.mode, n + 1);
    ++n;

    double change = 0.0;
    for (std::size_t i = 0; i < state.U.size(); ++i) {
      change = std::max(change, std::abs(state.U[i] - previous.U[i]));
      change = std::max(change, std::abs(state.V[i] - previous.V[i]));
    }
    const bool steady = change / dt < options.steady_tolerance;

    while (next < snapshot_steps.size() && snapshot_steps[next] <= n) {
      result.snapshots.push_back({times[next], state});
      result.mass_series.push_back(discrete_mass(state.U, state.V, dx));
      ++next;
    }
    if (steady && options.stop_when_steady) {
      result.converged = true;
      break;
    }
  }
  while (next < snapshot_steps.size()) {
    result.snapshots.push_back({times[next], state});
    result.mass_series.push_back(discrete_mass(state.U, state.V, dx));
    ++next;
  }

  result.steps = n;
  result.final = {static_cast<double>(n) * dt, state};
  const auto [ml, mr] = stepper.grid().membrane_index();
  result.jump_u = std::abs(state.U[mr] - state.U[ml]);
  result.jump_v = std::abs(state.V[mr] - state.V[ml]);
  return result;
}

double side_variation(std::span<const double> values, const Grid& grid, bool left) {
  const std::size_t begin = left ? 0 : grid.left_size();
  const std::size_t end = left ? grid.left_size() : grid.size();
  const auto [lo, hi] = std::minmax_element(values.begin() + begin, values.begin() + end);
  return *hi - *lo;
}

int sign_changes(std::span<const double> values, double reference) {
  int changes = 0;
  int last = 0;
  for (double x : values) {
    const double d = x - reference;
    const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_changes_side(std::span<const double> values, double reference, const Grid& grid, bool left) {
  const std::size_t begin = left ? 0 : grid.left_size();
  const std::size_t count = left ? grid.left_size() : grid.size() - grid.left_size();
  return sign_changes(values.subspan(begin, count), reference);
}

}  // namespace memturing::fdm
