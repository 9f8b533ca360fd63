#include "memturing/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "memturing/errors.hpp"

namespace memturing::stability {

namespace {

double sign_of(double x) { return x < 0 ? -1.0 : 1.0; }

}  // namespace

OdeStabilityReport ode_stability(const Jacobian& jac) {
  OdeStabilityReport r;
  r.tr = jac.trace();
  r.det = jac.det();
  r.stable = r.tr < 0 && r.det >= 0;
  r.det_borderline = r.det == 0.0;
  r.activator_inhibitor = jac.fu > 0 && jac.gv < 0;
  return r;
}

double p_polynomial(double eta, double theta, const Jacobian& jac) {
  return theta * eta * eta - eta * (jac.fu + theta * jac.gv) + jac.det();
}

DispersionResult dispersion(double eta, double theta, const Jacobian& jac) {
  const double b = eta * (1.0 + theta) - jac.trace();
  const double c = p_polynomial(eta, theta, jac);
  const double disc = b * b - 4.0 * c;

  DispersionResult d;
  d.eta = eta;
  if (disc >= 0) {
    const double q = -0.5 * (b + sign_of(b) * std::sqrt(disc));
    const double r1 = q;
    const double r2 = q != 0.0 ? c / q : 0.0;
    d.mu_plus = std::max(r1, r2);
    d.mu_minus = std::min(r1, r2);
  } else {
    const double re = -0.5 * b;
    const double im = 0.5 * std::sqrt(-disc);
    d.mu_plus = {re, im};
    d.mu_minus = {re, -im};
  }
  d.max_re = d.mu_plus.real();
  return d;
}

double theta_critical(const Jacobian& jac) {
  if (jac.gv == 0.0) throw DomainError("theta_critical: gv must be nonzero");
  const double a = jac.gv * jac.gv;
  const double half_b = jac.fu * jac.gv - 2.0 * jac.det();
  const double c = jac.fu * jac.fu;
  // (fu gv - 2 det)^2 - gv^2 fu^2 factors as -4 det fv gu, which avoids the
  // cancellation at the double root.
  const double quarter_disc = -4.0 * jac.det() * jac.fv * jac.gu;
  if (quarter_disc < 0) throw DomainError("theta_critical: no real critical ratio");

  const double q = -(half_b + sign_of(half_b) * std::sqrt(quarter_disc));
  double roots[2] = {std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::quiet_NaN()};
  if (q != 0.0) {
    roots[0] = q / a;
    roots[1] = c / q;
  }

  double best = -1.0;
  for (double t : roots) {
    if (!(t > 0) || !std::isfinite(t)) continue;
    const double tol = 1e-12 * (std::abs(jac.fu) + t * std::abs(jac.gv));
    if (jac.fu + t * jac.gv >= -tol) best = std::max(best, t);
  }
  if (best <= 0) throw DomainError("theta_critical: no admissible root (system cannot be destabilised)");
  return best;
}

InstabilityRange instability_range(double theta, const Jacobian& jac) {
  if (!(theta > 0)) throw DomainError("instability_range: theta must be > 0");
  InstabilityRange r;
  const double s = jac.fu + theta * jac.gv;
  const double det = jac.det();
  r.eta_min = s / (2.0 * theta);
  r.p_min = det - s * s / (4.0 * theta);
  try {
    r.theta_c = theta_critical(jac);
  } catch (const DomainError&) {
    r.theta_c = std::numeric_limits<double>::quiet_NaN();
  }

  const double disc = s * s - 4.0 * theta * det;
  const double scale = std::abs(jac.fu) + theta * std::abs(jac.gv);
  // Ranges narrower than 1e-12 of the coefficient scale are rounding noise
  // around the bifurcation point.
  if (!(disc > 0) || std::sqrt(disc) <= 1e-12 * scale) return r;

  const double root = std::sqrt(disc);
  if (s >= 0) {
    r.eta_plus = (s + root) / (2.0 * theta);
    r.eta_minus = 2.0 * det / (s + root);
  } else {
    r.eta_minus = (s - root) / (2.0 * theta);
    r.eta_plus = 2.0 * det / (s - root);
  }
  r.empty = !(r.eta_plus > 0);
  if (r.empty) r.eta_minus = r.eta_plus = 0.0;
  return r;
}

ModeDirection mode_eigenvector(double eta, double theta, const Jacobian& jac) {
  const DispersionResult d = dispersion(eta, theta, jac);
  if (d.mu_plus.imag() != 0.0) {
    throw DomainError("mode_eigenvector: growth rate is complex, no real direction");
  }
  double a = jac.fv;
  double b = d.mu_plus.real() + theta * eta - jac.fu;
  if (std::max(std::abs(a), std::abs(b)) < 1e-14) {
    throw DomainError("mode_eigenvector: degenerate direction");
  }
  const double n = std::hypot(a, b);
  a /= n;
  b /= n;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

}  // namespace memturing::stability
