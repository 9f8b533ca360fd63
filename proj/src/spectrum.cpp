#include "memturing/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "memturing/errors.hpp"
#include "memturing/tridiagonal.hpp"

namespace memturing::spectrum {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Regime { Zero, Finite, Infinite };

Regime regime_of(const ModelParams& p) {
  if (p.k_v < kZeroPermeability) return Regime::Zero;
  if (p.k_v >= kInfinitePermeability) return Regime::Infinite;
  return Regime::Finite;
}

void require_symmetric_setup(const ModelParams& p, const char* who) {
  if (std::abs(p.nu_D() - 1.0) > 1e-12) {
    throw DomainError(std::string(who) + ": only nu_D = 1 is supported (D_vl must equal D_vr)");
  }
  if (std::abs(p.x_m - 0.5 * p.L) > 1e-12 * p.L) {
    throw DomainError(std::string(who) + ": the membrane must sit at L/2");
  }
}

/// kappa = k_v L / D_vr; the antisymmetric modes solve x tan x = kappa with
/// x = sqrt(eta / D_vr) L / 2.
double kappa_of(const ModelParams& p) { return p.k_v * p.L / p.D_vr; }

/// Root of x tan x = kappa on the branch (m pi, (m + 1/2) pi). Bisection on
/// (-1)^m (x sin x - kappa cos x), which has the same sign as x tan x - kappa
/// inside the branch and stays finite at the pole end.
double branch_root(int m, double kappa) {
  const double parity = (m % 2 == 0) ? 1.0 : -1.0;
  const auto H = [&](double x) { return parity * (x * std::sin(x) - kappa * std::cos(x)); };
  double lo = m * kPi;
  double hi = (m + 0.5) * kPi;
  for (int it = 0; it < 400 && hi - lo >= 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (H(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

EigenMode antisymmetric_mode(int n, double x, const ModelParams& p, bool degenerate) {
  EigenMode mode;
  mode.n = n;
  mode.b_n = 2.0 * x / p.L;
  mode.a_n = mode.b_n;
  mode.eta = p.D_vr * mode.b_n * mode.b_n;
  mode.lambda = p.theta * mode.eta;
  mode.C1 = -1.0;
  const double b = mode.b_n;
  const double sq = b == 0.0 ? p.L : 0.5 * p.L + std::sin(b * p.L) / (2.0 * b);
  mode.norm = 1.0 / std::sqrt(sq);
  mode.degenerate_zero = degenerate;
  return mode;
}

EigenMode constant_mode(const ModelParams& p, bool degenerate) {
  EigenMode mode;
  mode.n = 0;
  mode.C1 = 1.0;
  mode.norm = 1.0 / std::sqrt(p.L);
  mode.degenerate_zero = degenerate;
  return mode;
}

/// x for antisymmetric branch m.
double branch_abscissa(int m, const ModelParams& p) {
  switch (regime_of(p)) {
    case Regime::Zero:
      return m * kPi;
    case Regime::Infinite:
      return (m + 0.5) * kPi;
    case Regime::Finite:
      break;
  }
  return branch_root(m, kappa_of(p));
}

}  // namespace

double EigenMode::xi(double D_vr) const { return std::sqrt(eta / D_vr); }

std::optional<double> r_general(double eta, const ModelParams& p) {
  const double s = std::sqrt(eta);
  const double arg_l = s / std::sqrt(p.D_vl) * p.L / 2.0;
  const double arg_r = s / std::sqrt(p.D_vr) * p.L / 2.0;
  if (std::abs(std::cos(arg_l)) < 1e-12 || std::abs(std::cos(arg_r)) < 1e-12) return std::nullopt;
  const double tl = std::tan(arg_l);
  const double tr = std::tan(arg_r);
  const double denom = tl + std::sqrt(p.nu_D()) * tr;
  if (std::abs(denom) < 1e-12 * (std::abs(tl) + std::abs(tr))) return std::nullopt;
  return s * tl * tr / denom - p.k_v / std::sqrt(p.D_vr);
}

std::optional<double> r_simple(double eta, const ModelParams& p) {
  const double s = std::sqrt(eta);
  const double arg = s / std::sqrt(p.D_vr) * p.L / 2.0;
  if (std::abs(std::cos(arg)) < 1e-12) return std::nullopt;
  return s * std::tan(arg) - 2.0 * p.k_v / std::sqrt(p.D_vr);
}

double q_scaled(double xi, double k_over_D) { return xi * std::tan(xi / 2.0) - 2.0 * k_over_D; }

std::vector<EigenMode> eigenvalues(const ModelParams& p, int n_max) {
  if (n_max < 1) throw DomainError("eigenvalues: n_max must be >= 1");
  require_symmetric_setup(p, "eigenvalues");
  const bool zero = regime_of(p) == Regime::Zero;

  std::vector<EigenMode> modes;
  modes.reserve(static_cast<std::size_t>(n_max) + 1);
  modes.push_back(constant_mode(p, zero));
  for (int n = 1; n <= n_max; ++n) {
    const int m = n - 1;
    modes.push_back(antisymmetric_mode(n, branch_abscissa(m, p), p, zero && m == 0));
  }
  return modes;
}

std::vector<EigenMode> eigenvalues_below(const ModelParams& p, double eta_max) {
  require_symmetric_setup(p, "eigenvalues_below");
  const bool zero = regime_of(p) == Regime::Zero;
  std::vector<EigenMode> modes{constant_mode(p, zero)};
  for (int m = 0;; ++m) {
    EigenMode mode = antisymmetric_mode(m + 1, branch_abscissa(m, p), p, zero && m == 0);
    if (!(mode.eta < eta_max)) break;
    modes.push_back(mode);
  }
  return modes;
}

double mode_residual(const EigenMode& mode, const ModelParams& p) {
  if (mode.n == 0) return 0.0;
  const double x = mode.b_n * p.L / 2.0;
  switch (regime_of(p)) {
    case Regime::Zero:
      return std::abs(std::sin(x));
    case Regime::Infinite:
      return std::abs(std::cos(x));
    case Regime::Finite:
      break;
  }
  const double kappa = kappa_of(p);
  return std::abs(x * std::sin(x) - kappa * std::cos(x)) / (1.0 + kappa + x);
}

namespace {

void check_side(double x, Side side, const ModelParams& p) {
  const double tol = 1e-12 * p.L;
  const bool ok = side == Side::Left ? (x >= -tol && x <= p.x_m + tol)
                                     : (x >= p.x_m - tol && x <= p.L + tol);
  if (!ok) {
    throw DomainError("eigenfunction: x = " + std::to_string(x) + " is not on the " +
                      (side == Side::Left ? "left" : "right") + " segment");
  }
}

}  // namespace

double eigenfunction(const EigenMode& mode, double x, Side side, const ModelParams& p) {
  check_side(x, side, p);
  if (side == Side::Left) return mode.C1 * mode.norm * std::cos(mode.a_n * x);
  return mode.norm * std::cos(mode.b_n * (x - p.L));
}

double eigenfunction_derivative(const EigenMode& mode, double x, Side side, const ModelParams& p) {
  check_side(x, side, p);
  if (side == Side::Left) return -mode.C1 * mode.norm * mode.a_n * std::sin(mode.a_n * x);
  return -mode.norm * mode.b_n * std::sin(mode.b_n * (x - p.L));
}

std::vector<double> sample(const EigenMode& mode, const fdm::Grid& grid, const ModelParams& p) {
  std::vector<double> z(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    z[i] = eigenfunction(mode, grid.centers[i], grid.is_left(i) ? Side::Left : Side::Right, p);
  }
  return z;
}

UnstableModes count_unstable(const stability::InstabilityRange& range, const ModelParams& p) {
  UnstableModes out;
  if (range.empty) return out;
  for (const EigenMode& mode : eigenvalues_below(p, range.eta_plus)) {
    if (mode.eta > range.eta_minus && mode.eta < range.eta_plus) {
      out.etas.push_back(mode.eta);
      out.indices.push_back(mode.n);
    }
  }
  out.count = static_cast<int>(out.etas.size());
  return out;
}

std::vector<double> project(std::span<const double> deviation, std::span<const EigenMode> modes,
                            const fdm::Grid& grid, const ModelParams& p) {
  if (deviation.size() != grid.size()) throw DomainError("project: deviation does not match the grid");
  std::vector<double> coeffs;
  coeffs.reserve(modes.size());
  for (const EigenMode& mode : modes) {
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      acc += deviation[i] *
             eigenfunction(mode, grid.centers[i], grid.is_left(i) ? Side::Left : Side::Right, p);
    }
    coeffs.push_back(grid.dx * acc);
  }
  return coeffs;
}

std::vector<double> discrete_spectrum_oracle(const ModelParams& p, int N, int n_max, Sector sector) {
  if (N < 50) throw DomainError("discrete_spectrum_oracle: need N >= 50 cells per side");
  if (std::abs(p.x_m - 0.5 * p.L) > 1e-12 * p.L) {
    throw DomainError("discrete_spectrum_oracle: the membrane must sit at L/2");
  }
  const double dx = p.x_m / N;
  const double cl = p.D_vl / (dx * dx);
  const double cr = p.D_vr / (dx * dx);
  const double km = p.k_v / dx;
  const auto n = static_cast<std::size_t>(N);

  std::vector<double> diag;
  std::vector<double> off;
  if (sector == Sector::Full) {
    diag.assign(2 * n, 0.0);
    off.assign(2 * n - 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      diag[i] = (i == 0 ? 1.0 : 2.0) * cl;
      diag[n + i] = (i + 1 == n ? 1.0 : 2.0) * cr;
    }
    diag[n - 1] = cl + km;
    diag[n] = cr + km;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      off[i] = -cl;
      off[n + i] = -cr;
    }
    off[n - 1] = -km;
  } else {
    if (std::abs(p.nu_D() - 1.0) > 1e-12) {
      throw DomainError("discrete_spectrum_oracle: symmetry sectors need D_vl = D_vr");
    }
    // Mirror reduction onto the left block: the right neighbour across the
    // membrane equals +z (symmetric) or -z (antisymmetric) of the last cell.
    diag.assign(n, 2.0 * cl);
    off.assign(n - 1, -cl);
    diag[0] = cl;
    diag[n - 1] = cl + (sector == Sector::Antisymmetric ? 2.0 * km : 0.0);
  }

  std::vector<double> eig = symmetric_tridiagonal_eigenvalues(diag, off);
  if (n_max >= 0 && static_cast<std::size_t>(n_max) < eig.size()) eig.resize(static_cast<std::size_t>(n_max));
  return eig;
}

}  // namespace memturing::spectrum
