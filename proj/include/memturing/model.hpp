#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "memturing/grid.hpp"
#include "memturing/params.hpp"

namespace memturing::model {

/// h(u) = alpha u (u - 1)^2
double h(double u, double alpha);
/// h'(u) = alpha (1 - u)(1 - 3u)
double h_prime(double u, double alpha);

struct Reaction {
  double f = 0.0;
  double g = 0.0;
};

/// f = (v - h(u)) / eps and g = -f, so f + g == 0 bit for bit.
Reaction reaction(double u, double v, double eps, double alpha);

/// Partial derivatives of (f, g) at an equilibrium.
struct Jacobian {
  double fu = 0.0;
  double fv = 0.0;
  double gu = 0.0;
  double gv = 0.0;

  double trace() const { return fu + gv; }
  double det() const { return fu * gv - fv * gu; }
};

struct SteadyState {
  double u_bar = 0.0;
  double v_bar = 0.0;
  double M = 0.0;
  Jacobian jac;
};

/// Jacobian of the mass-conserving reaction at u: fu = -h'/eps, fv = 1/eps,
/// gu = h'/eps, gv = -1/eps.
Jacobian reaction_jacobian(double u, double eps, double alpha);

/// Unique root of G(u) = M - u - h(u) on [0, M] by bisection.
SteadyState steady_state(double M, double eps, double alpha, int max_iterations = 200);

/// (1/L) dx sum(u0 + v0) over both segments.
double conserved_mass(std::span<const double> u0, std::span<const double> v0,
                      const fdm::Grid& grid);

enum class InitialPreset { Wave, ConstantPlusNoise, EigenmodePerturbation };

InitialPreset parse_preset(std::string_view name);
std::string_view preset_name(InitialPreset preset);

struct InitialDataOptions {
  /// Total mass per unit length of the equilibrium the perturbative presets
  /// start from.
  double mass = 0.8;
  std::uint64_t seed = 12345;
  double noise_amplitude = 1e-2;
  int mode = 1;
  double delta = 1e-3;
};

struct InitialState {
  std::vector<double> u;
  std::vector<double> v;
};

/// Initial profiles sampled at the grid cell centres.
///
/// - Wave: u0 = 7/15 + sin(4 pi x / L)/5 on the left, 1/5 + sin(4 pi x / L)/5
///   on the right; v0 = 1/3 - sin/5 and 3/5 - sin/5. u0 + v0 = 4/5 everywhere.
/// - ConstantPlusNoise: (u_bar, v_bar) + independent uniform noise in
///   [-a, a] from a seeded generator.
/// - EigenmodePerturbation: (u_bar, v_bar) + delta z_n(x) (a, b) with (a, b) the
///   dominant linear growth direction of mode n.
InitialState initial_data(InitialPreset preset, const fdm::Grid& grid, const ModelParams& params,
                          const InitialDataOptions& options = {});

}  // namespace memturing::model
