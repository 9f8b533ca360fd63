#include "memturing/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "memturing/errors.hpp"

namespace memturing {

bool ModelParams::permeabilities_coupled() const {
  const double expected = theta * k_v;
  return std::abs(k_u - expected) <= 1e-12 * std::max(std::abs(expected), 1e-300);
}

double default_time_step(double eps) { return std::min(1e-2, eps / 4.0); }

ModelParams reference_params(double theta, double k_v, double eps) {
  ModelParams p;
  p.theta = theta;
  p.k_v = k_v;
  p.k_u = theta * k_v;
  p.eps = eps;
  p.dt = default_time_step(eps);
  set_grid_step(p, 1.0 / 200.0);
  return p;
}

void set_grid_step(ModelParams& p, double dx) {
  p.dx = dx;
  p.N_l = static_cast<int>(std::lround(p.x_m / dx)) - 1;
  p.N_r = static_cast<int>(std::lround((p.L - p.x_m) / dx)) - 1;
}

namespace {

void require(bool ok, const char* key, const std::string& what) {
  if (!ok) throw ConfigError(key, what);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

std::vector<std::string> validate(const ModelParams& p) {
  require(finite(p.L) && p.L > 0, "L", "must be > 0");
  require(finite(p.x_m) && p.x_m > 0 && p.x_m < p.L, "x_m", "must satisfy 0 < x_m < L");
  require(finite(p.D_vl) && p.D_vl > 0, "D_vl", "must be > 0");
  require(finite(p.D_vr) && p.D_vr > 0, "D_vr", "must be > 0");
  require(finite(p.theta) && p.theta > 0, "theta", "must be > 0");
  require(finite(p.k_u) && p.k_u >= 0, "k_u", "must be >= 0");
  require(finite(p.k_v) && p.k_v >= 0, "k_v", "must be >= 0");
  require(finite(p.eps) && p.eps > 0, "eps", "must be > 0");
  require(finite(p.alpha), "alpha", "must be finite");
  require(finite(p.Theta_scheme) && p.Theta_scheme >= 0 && p.Theta_scheme <= 1, "Theta_scheme",
          "must lie in [0, 1]");
  require(finite(p.dx) && p.dx > 0, "dx", "must be > 0");
  require(finite(p.dt) && p.dt > 0, "dt", "must be > 0");
  require(p.N_l >= 2, "N_l", "must be >= 2");
  require(p.N_r >= 2, "N_r", "must be >= 2");
  const double dx_l = p.x_m / (p.N_l + 1);
  const double dx_r = (p.L - p.x_m) / (p.N_r + 1);
  require(std::abs(dx_l - dx_r) <= 1e-12 * dx_l, "N_r",
          "left and right segments must share the same step");
  require(std::abs(dx_l - p.dx) <= 1e-12 * dx_l, "dx", "inconsistent with x_m / (N_l + 1)");

  std::vector<std::string> warnings;
  if (!(p.alpha > 0 && p.alpha < 3)) {
    std::ostringstream os;
    os << "alpha = " << p.alpha << " outside (0, 3): h' > -1 is not guaranteed";
    warnings.push_back(os.str());
  }
  if (p.dt > p.eps / 2) {
    std::ostringstream os;
    os << "dt = " << p.dt << " exceeds eps/2 = " << p.eps / 2
       << "; the explicit reaction may be unstable";
    warnings.push_back(os.str());
  }
  if (!p.permeabilities_coupled()) {
    warnings.push_back("k_u != theta * k_v: eigenfunctions of u and v differ, the linear analysis "
                       "does not apply exactly");
  }
  return warnings;
}

}  // namespace memturing
