#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "memturing/grid.hpp"
#include "memturing/params.hpp"
#include "memturing/stability.hpp"

namespace memturing::spectrum {

/// Permeabilities below this are treated as exactly zero.
inline constexpr double kZeroPermeability = 1e-12;

enum class Side { Left, Right };

/// One eigenpair of -D_v z'' = eta z with Neumann ends and Kedem-Katchalsky
/// coupling at x_m = L/2 (nu_D = 1).
///
/// Mode 0 is the constant 1/sqrt(L). Modes n >= 1 are antisymmetric about the
/// membrane: z_l = C1 norm cos(a x), z_r = norm cos(b (x - L)) with C1 = -1.
struct EigenMode {
  int n = 0;
  double eta = 0.0;
  double lambda = 0.0;
  double C1 = -1.0;
  double a_n = 0.0;
  double b_n = 0.0;
  double norm = 0.0;
  bool degenerate_zero = false;

  /// sqrt(eta / D_vr), the abscissa tabulated for L = 1.
  double xi(double D_vr) const;
};

/// r(eta) for general nu_D; nullopt near a tangent pole or a vanishing
/// denominator.
std::optional<double> r_general(double eta, const ModelParams& p);

/// r(eta) = sqrt(eta) tan(sqrt(eta/D_vr) L/2) - 2 k_v / sqrt(D_vr); for
/// nu_D = 1 it equals 2 r_general. nullopt near a tangent pole.
std::optional<double> r_simple(double eta, const ModelParams& p);

/// q(xi) = xi tan(xi/2) - 2 k/D for L = 1.
double q_scaled(double xi, double k_over_D);

/// Modes 0..n_max in increasing eta. Requires nu_D = 1 and x_m = L/2.
std::vector<EigenMode> eigenvalues(const ModelParams& p, int n_max);

/// All modes with eta < eta_max (mode 0 always included).
std::vector<EigenMode> eigenvalues_below(const ModelParams& p, double eta_max);

/// Residual of the relation the mode's eta was solved from, normalised to be
/// scale free: sin(x) (k = 0), cos(x) (k = inf), (x sin x - kappa cos x)/(1 + kappa + x)
/// otherwise, with x = sqrt(eta/D_vr) L/2 and kappa = k_v L / D_vr.
double mode_residual(const EigenMode& mode, const ModelParams& p);

/// L2-normalised eigenfunction value. Throws DomainError when x lies outside
/// the requested side.
double eigenfunction(const EigenMode& mode, double x, Side side, const ModelParams& p);
double eigenfunction_derivative(const EigenMode& mode, double x, Side side, const ModelParams& p);

/// Eigenfunction sampled at every grid centre.
std::vector<double> sample(const EigenMode& mode, const fdm::Grid& grid, const ModelParams& p);

struct UnstableModes {
  int count = 0;
  std::vector<double> etas;
  std::vector<int> indices;
};

/// Modes with eta_minus < eta_n < eta_plus (strict).
UnstableModes count_unstable(const stability::InstabilityRange& range, const ModelParams& p);

/// alpha_n = dx sum_i deviation_i z_n(x_i).
std::vector<double> project(std::span<const double> deviation, std::span<const EigenMode> modes,
                            const fdm::Grid& grid, const ModelParams& p);

enum class Sector {
  Full,
  /// z_r(x_m + s) = z_l(x_m - s): continuous modes, pure Neumann on each half.
  Symmetric,
  /// z_r(x_m + s) = -z_l(x_m - s): the family solved by eigenvalues().
  Antisymmetric
};

/// Smallest n_max eigenvalues of the N-cell-per-side discrete membrane
/// Laplacian for the inhibitor (same stencil and ghost elimination as the
/// time stepper, without the time step). The symmetric sectors need a
/// mirror-symmetric setup (x_m = L/2, D_vl = D_vr).
std::vector<double> discrete_spectrum_oracle(const ModelParams& p, int N, int n_max,
                                             Sector sector = Sector::Full);

}  // namespace memturing::spectrum
