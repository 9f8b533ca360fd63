#include "memturing/model.hpp"

#include <cmath>
#include <string>

#include "memturing/errors.hpp"

namespace memturing::model {

double h(double u, double alpha) { return alpha * u * (u - 1.0) * (u - 1.0); }

double h_prime(double u, double alpha) { return alpha * (1.0 - u) * (1.0 - 3.0 * u); }

Reaction reaction(double u, double v, double eps, double alpha) {
  const double f = (v - h(u, alpha)) / eps;
  return {f, -f};
}

Jacobian reaction_jacobian(double u, double eps, double alpha) {
  const double hp = h_prime(u, alpha);
  return {-hp / eps, 1.0 / eps, hp / eps, -1.0 / eps};
}

SteadyState steady_state(double M, double eps, double alpha, int max_iterations) {
  if (!(M > 0)) throw DomainError("steady_state: mass must be > 0, got " + std::to_string(M));
  if (!(eps > 0)) throw DomainError("steady_state: eps must be > 0");

  // G is strictly decreasing for 0 < alpha < 3, with G(0) = M > 0.
  const auto G = [&](double u) { return M - u - h(u, alpha); };
  double lo = 0.0;
  double hi = M;
  if (G(hi) > 0) throw DomainError("steady_state: no sign change of M - u - h(u) on [0, M]");

  for (int it = 0; it < max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g = G(mid);
    if (g == 0.0) {
      lo = hi = mid;
      break;
    }
    (g > 0 ? lo : hi) = mid;
  }
  const double u = std::abs(G(lo)) <= std::abs(G(hi)) ? lo : hi;

  SteadyState s;
  s.u_bar = u;
  s.v_bar = h(u, alpha);
  s.M = M;
  s.jac = reaction_jacobian(u, eps, alpha);
  return s;
}

double conserved_mass(std::span<const double> u0, std::span<const double> v0, const fdm::Grid& grid) {
  if (u0.size() != grid.size() || v0.size() != grid.size()) {
    throw DomainError("conserved_mass: profile length does not match the grid");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < u0.size(); ++i) sum += u0[i] + v0[i];
  return grid.dx * sum / grid.L;
}

InitialPreset parse_preset(std::string_view name) {
  if (name == "paper-fig3") return InitialPreset::Wave;
  if (name == "constant-plus-noise") return InitialPreset::ConstantPlusNoise;
  if (name == "eigenmode-perturbation") return InitialPreset::EigenmodePerturbation;
  throw DomainError("unknown initial-data preset '" + std::string(name) + "'");
}

std::string_view preset_name(InitialPreset preset) {
  switch (preset) {
    case InitialPreset::Wave:
      return "paper-fig3";
    case InitialPreset::ConstantPlusNoise:
      return "constant-plus-noise";
    case InitialPreset::EigenmodePerturbation:
      return "eigenmode-perturbation";
  }
  return "?";
}

}  // namespace memturing::model
