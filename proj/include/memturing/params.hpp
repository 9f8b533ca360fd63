#pragma once

#include <string>
#include <vector>

namespace memturing {

/// Numerical stand-in for an impermeable-to-nothing membrane (k = +inf).
inline constexpr double kInfinitePermeability = 1e8;

/// Physical and numerical constants of the two-compartment system.
///
/// The activator diffusivities are not stored: they follow from the ratio
/// `theta` as D_ul = theta * D_vl and D_ur = theta * D_vr, which is the regime
/// where both species share the same membrane eigenfunctions.
struct ModelParams {
  double L = 1.0;
  double x_m = 0.5;
  double D_vl = 1.0;
  double D_vr = 1.0;
  double theta = 7.8e-2;
  double k_u = 7.8e-2;
  double k_v = 1.0;
  double eps = 1.0;
  double alpha = 1.0;
  double Theta_scheme = 1.0;
  double dx = 1.0 / 200.0;
  double dt = 1e-2;
  int N_l = 99;
  int N_r = 99;

  double D_ul() const { return theta * D_vl; }
  double D_ur() const { return theta * D_vr; }
  double nu_D() const { return D_vr / D_vl; }
  /// True when k_u = theta * k_v (relative 1e-12).
  bool permeabilities_coupled() const;
};

/// Default time step: min(1e-2, eps/4).
double default_time_step(double eps);

/// The reference setting D_vl = D_vr = 1, k_u = theta * k_v, on [0, 1] with
/// the membrane at 1/2 and dx = 1/200.
ModelParams reference_params(double theta, double k_v, double eps = 1.0);

/// Sets dx and derives N_l, N_r so that both segments share the step.
void set_grid_step(ModelParams& p, double dx);

/// Throws ConfigError naming the offending field; returns non-fatal warnings.
std::vector<std::string> validate(const ModelParams& p);

}  // namespace memturing
