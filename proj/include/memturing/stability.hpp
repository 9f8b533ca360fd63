#pragma once

#include <complex>

#include "memturing/model.hpp"

namespace memturing::stability {

using model::Jacobian;

struct OdeStabilityReport {
  double tr = 0.0;
  double det = 0.0;
  bool stable = false;
  /// det == 0: admitted as stable, but only marginally.
  bool det_borderline = false;
  bool activator_inhibitor = false;
};

/// Stable iff tr < 0 and det >= 0.
OdeStabilityReport ode_stability(const Jacobian& jac);

/// Roots of mu^2 + mu [eta (1 + theta) - tr] + p(eta) = 0.
struct DispersionResult {
  double eta = 0.0;
  std::complex<double> mu_plus;
  std::complex<double> mu_minus;
  double max_re = 0.0;
};

DispersionResult dispersion(double eta, double theta, const Jacobian& jac);

/// p(eta) = theta eta^2 - eta (fu + theta gv) + det.
double p_polynomial(double eta, double theta, const Jacobian& jac);

/// Critical diffusion ratio: the admissible root of
/// gv^2 t^2 + 2 (fu gv - 2 det) t + fu^2 = 0, i.e. the largest positive root
/// with fu + t gv >= 0. Throws DomainError when none exists.
double theta_critical(const Jacobian& jac);

struct InstabilityRange {
  double eta_minus = 0.0;
  double eta_plus = 0.0;
  double eta_min = 0.0;
  double p_min = 0.0;
  double theta_c = 0.0;
  bool empty = true;

  bool contains(double eta) const { return !empty && eta_minus < eta && eta < eta_plus; }
};

/// Interval of eta where p(eta) < 0. theta_c is NaN when the reaction system
/// admits no critical ratio.
InstabilityRange instability_range(double theta, const Jacobian& jac);

struct ModeDirection {
  double a = 0.0;
  double b = 0.0;
};

/// Unit (alpha, beta) amplitude direction of the dominant root mu_+ at eta:
/// proportional to (fv, mu_+ + theta eta - fu). Throws DomainError when both
/// components vanish.
ModeDirection mode_eigenvector(double eta, double theta, const Jacobian& jac);

}  // namespace memturing::stability
