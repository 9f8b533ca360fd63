#include "memturing/grid.hpp"

#include <cmath>

#include "memturing/errors.hpp"

namespace memturing::fdm {

Grid build_grid(const ModelParams& p) {
  if (p.N_l < 2 || p.N_r < 2) throw DomainError("build_grid: N_l and N_r must be >= 2");
  if (!(p.L > 0) || !(p.x_m > 0) || !(p.x_m < p.L)) {
    throw DomainError("build_grid: need 0 < x_m < L");
  }
  const double dx_l = p.x_m / (p.N_l + 1);
  const double dx_r = (p.L - p.x_m) / (p.N_r + 1);
  if (std::abs(dx_l - dx_r) > 1e-12 * dx_l) {
    throw DomainError("build_grid: segment steps differ (" + std::to_string(dx_l) + " vs " +
                      std::to_string(dx_r) + ")");
  }

  Grid g;
  g.N_l = p.N_l;
  g.N_r = p.N_r;
  g.dx = dx_l;
  g.x_m = p.x_m;
  g.L = p.L;
  g.centers.reserve(g.size());
  for (int i = 0; i <= p.N_l; ++i) g.centers.push_back((i + 0.5) * dx_l);
  for (int j = 0; j <= p.N_r; ++j) g.centers.push_back(p.x_m + (j + 0.5) * dx_l);
  return g;
}

}  // namespace memturing::fdm
