#include "memturing/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include "memturing/errors.hpp"
#include "memturing/grid.hpp"
#include "memturing/output.hpp"

namespace memturing::cli {

double initial_mass(const RunConfig& config) {
  if (config.preset != model::InitialPreset::Wave) return config.initial.mass;
  const fdm::Grid grid = fdm::build_grid(config.params);
  const auto init = model::initial_data(config.preset, grid, config.params, config.initial);
  return model::conserved_mass(init.u, init.v, grid);
}

AnalyzeReport analyze(const RunConfig& config) {
  const ModelParams& p = config.params;
  AnalyzeReport r;
  r.M = initial_mass(config);
  r.steady = model::steady_state(r.M, p.eps, p.alpha);
  r.ode = stability::ode_stability(r.steady.jac);
  try {
    r.theta_c = stability::theta_critical(r.steady.jac);
  } catch (const DomainError&) {
    r.theta_c = std::numeric_limits<double>::quiet_NaN();
  }
  r.range = stability::instability_range(p.theta, r.steady.jac);

  try {
    if (!r.range.empty && r.range.eta_plus > 0) {
      r.modes = spectrum::eigenvalues_below(p, r.range.eta_plus);
      // One mode past the band, to show where it closes.
      const auto next = spectrum::eigenvalues(p, static_cast<int>(r.modes.size()));
      r.modes.push_back(next.back());
    }
    if (r.modes.size() < 6) r.modes = spectrum::eigenvalues(p, 5);
    r.unstable = spectrum::count_unstable(r.range, p);
  } catch (const DomainError& e) {
    r.modes.clear();
    r.spectrum_note = e.what();
  }
  for (const auto& m : r.modes) r.residuals.push_back(spectrum::mode_residual(m, p));

  for (std::size_t i = 0; i < r.modes.size(); ++i) {
    const double g = stability::dispersion(r.modes[i].eta, p.theta, r.steady.jac).max_re;
    if (g > 0 && (r.dominant_mode < 0 || g > r.dominant_growth)) {
      r.dominant_mode = static_cast<int>(i);
      r.dominant_growth = g;
    }
  }

  if (!r.ode.stable) {
    r.verdict = "equilibrium unstable without diffusion";
  } else if (!r.spectrum_note.empty()) {
    r.verdict = r.range.empty ? "converges to equilibrium" : "unknown (no membrane spectrum)";
  } else if (r.unstable.count == 0) {
    r.verdict = "converges to equilibrium";
  } else {
    r.verdict = "patterns expected (" + std::to_string(r.unstable.count) + " unstable mode" +
                (r.unstable.count == 1 ? "" : "s") + ")";
  }
  return r;
}

std::string format_report(const RunConfig& config, const AnalyzeReport& r) {
  std::ostringstream os;
  os << "# configuration\n";
  std::istringstream cfg(serialize_config(config));
  for (std::string line; std::getline(cfg, line);) os << "#   " << line << '\n';
  os << "#   dt = " << fmt(config.params.dt) << (config.dt_explicit ? "" : " (default)") << '\n';
  if (!config.k_u_explicit) os << "#   k_u = " << fmt(config.params.k_u) << " (theta * k_v)\n";
  for (const auto& w : config.warnings) os << "# warning: " << w << '\n';

  const auto& j = r.steady.jac;
  os << "M = " << fmt(r.M) << '\n';
  os << "u_bar = " << fmt(r.steady.u_bar) << '\n';
  os << "v_bar = " << fmt(r.steady.v_bar) << '\n';
  os << "h_prime = " << fmt(model::h_prime(r.steady.u_bar, config.params.alpha)) << '\n';
  os << "jacobian = [" << fmt(j.fu) << ", " << fmt(j.fv) << "; " << fmt(j.gu) << ", " << fmt(j.gv)
     << "]\n";
  os << "tr = " << fmt(r.ode.tr) << '\n';
  os << "det = " << fmt(r.ode.det) << (r.ode.det_borderline ? " (borderline)" : "") << '\n';
  os << "ode_stable = " << (r.ode.stable ? "yes" : "no") << '\n';
  os << "theta = " << fmt(config.params.theta) << '\n';
  os << "theta_c = " << (std::isnan(r.theta_c) ? std::string("none") : fmt(r.theta_c)) << '\n';
  if (r.range.empty) {
    os << "eta_range = empty\n";
  } else {
    os << "eta_minus = " << fmt(r.range.eta_minus) << '\n';
    os << "eta_plus = " << fmt(r.range.eta_plus) << '\n';
  }
  if (!r.spectrum_note.empty()) os << "spectrum = unavailable: " << r.spectrum_note << '\n';
  os << "modes:\n";
  os << "  n  eta  residual  max_re  unstable\n";
  for (std::size_t i = 0; i < r.modes.size(); ++i) {
    const auto& m = r.modes[i];
    const double g = stability::dispersion(m.eta, config.params.theta, j).max_re;
    os << "  " << m.n << "  " << fmt(m.eta) << "  " << fmt(r.residuals[i]) << "  " << fmt(g + 0.0) << "  "
       << (r.range.contains(m.eta) ? "yes" : "no") << '\n';
  }
  os << "unstable_count = " << r.unstable.count << '\n';
  if (r.dominant_mode >= 0) {
    os << "dominant_mode = " << r.modes[static_cast<std::size_t>(r.dominant_mode)].n << '\n';
    os << "dominant_growth = " << fmt(r.dominant_growth) << '\n';
  } else {
    os << "dominant_mode = none\n";
  }
  os << "verdict = " << r.verdict << '\n';
  return os.str();
}

std::string cmd_analyze(const RunConfig& config, const std::optional<std::filesystem::path>& out_dir) {
  const std::string text = format_report(config, analyze(config));
  if (out_dir) {
    ensure_directory(*out_dir);
    write_text_file(*out_dir / "report.txt", text);
  }
  return text;
}

namespace {

double sup_distance(const fdm::State& s, const model::SteadyState& eq) {
  double d = 0.0;
  for (std::size_t i = 0; i < s.U.size(); ++i) {
    d = std::max({d, std::abs(s.U[i] - eq.u_bar), std::abs(s.V[i] - eq.v_bar)});
  }
  return d;
}

std::string simulate_report(const RunConfig& config, const SimulateOutcome& o) {
  const fdm::Grid grid = fdm::build_grid(config.params);
  const auto& r = o.result;
  std::ostringstream os;
  os << "# configuration\n";
  std::istringstream cfg(serialize_config(config));
  for (std::string line; std::getline(cfg, line);) os << "#   " << line << '\n';
  os << "#   dt = " << fmt(config.params.dt) << (config.dt_explicit ? "" : " (default)") << '\n';
  for (const auto& w : config.warnings) os << "# warning: " << w << '\n';
  os << "u_bar = " << fmt(o.steady.u_bar) << '\n';
  os << "v_bar = " << fmt(o.steady.v_bar) << '\n';
  os << "converged = " << (r.converged ? "yes" : "no") << '\n';
  os << "steps = " << r.steps << '\n';
  os << "t_final = " << fmt(r.final.t) << '\n';
  os << "jump_u = " << fmt(r.jump_u) << '\n';
  os << "jump_v = " << fmt(r.jump_v) << '\n';
  os << "mass_drift = " << fmt(o.mass_drift) << '\n';
  os << "sup_distance = " << fmt(sup_distance(r.final.state, o.steady)) << '\n';
  const auto& U = r.final.state.U;
  os << "variation_u_l = " << fmt(fdm::side_variation(U, grid, true)) << '\n';
  os << "variation_u_r = " << fmt(fdm::side_variation(U, grid, false)) << '\n';
  os << "sign_changes_l = " << fdm::sign_changes_side(U, o.steady.u_bar, grid, true) << '\n';
  os << "sign_changes_r = " << fdm::sign_changes_side(U, o.steady.u_bar, grid, false) << '\n';
  os << "sign_changes = " << fdm::sign_changes(U, o.steady.u_bar) << '\n';
  os << "snapshots:\n";
  for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%02zu.csv", i);
    os << "  " << name << "  t = " << fmt(r.snapshots[i].t) << "  mass = " << fmt(r.mass_series[i + 1])
       << '\n';
  }
  return os.str();
}

}  // namespace

SimulateOutcome simulate(const RunConfig& config) {
  const ModelParams& p = config.params;
  const fdm::Grid grid = fdm::build_grid(p);
  const auto init = model::initial_data(config.preset, grid, p, config.initial);
  SimulateOutcome o;
  const double M = config.preset == model::InitialPreset::Wave
                       ? model::conserved_mass(init.u, init.v, grid)
                       : config.initial.mass;
  o.steady = model::steady_state(M, p.eps, p.alpha);
  fdm::RunOptions options;
  options.mode = config.mode;
  o.result = fdm::run(p, fdm::State{init.u, init.v}, config.T, o.steady, options);
  const double m0 = o.result.mass_series.front();
  for (double m : o.result.mass_series) o.mass_drift = std::max(o.mass_drift, std::abs(m - m0) / std::abs(m0));
  o.report = simulate_report(config, o);
  return o;
}

SimulateOutcome cmd_simulate(const RunConfig& config, const std::filesystem::path& out_dir, bool svg) {
  ensure_directory(out_dir);
  SimulateOutcome o;
  try {
    o = simulate(config);
  } catch (const BlowUpError& e) {
    std::ostringstream os;
    os << "# configuration\n";
    std::istringstream cfg(serialize_config(config));
    for (std::string line; std::getline(cfg, line);) os << "#   " << line << '\n';
    os << "status = blow-up\n";
    os << "step = " << e.step() << '\n';
    os << "t = " << fmt(static_cast<double>(e.step()) * config.params.dt) << '\n';
    os << "message = " << e.what() << '\n';
    os << "hint = reduce dt (eps/2 = " << fmt(config.params.eps / 2) << ")\n";
    write_text_file(out_dir / "report.txt", os.str());
    throw;
  }
  const fdm::Grid grid = fdm::build_grid(config.params);
  for (std::size_t i = 0; i < o.result.snapshots.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%02zu.csv", i);
    const auto& s = o.result.snapshots[i].state;
    write_text_file(out_dir / name, profile_csv(grid, s.U, s.V));
  }
  const auto& f = o.result.final.state;
  write_text_file(out_dir / "final.csv", profile_csv(grid, f.U, f.V));
  write_text_file(out_dir / "report.txt", o.report);
  if (svg) {
    char title[160];
    std::snprintf(title, sizeof title, "t = %s, theta = %s, k_v = %s, eps = %s", fmt(o.result.final.t).c_str(),
                  fmt(config.params.theta).c_str(), fmt(config.params.k_v).c_str(),
                  fmt(config.params.eps).c_str());
    write_text_file(out_dir / "final.svg", profile_svg(grid, f.U, f.V, title));
  }
  return o;
}

std::string cmd_spectrum(const RunConfig& config, int n_max) {
  if (n_max < 0) throw ConfigError("n-max", "must be >= 0");
  const ModelParams& p = config.params;
  const auto modes = spectrum::eigenvalues(p, n_max);
  std::ostringstream os;
  os << "n,eta,xi,lambda,residual,degenerate\n";
  for (const auto& m : modes) {
    os << m.n << ',' << fmt(m.eta) << ',' << fmt(m.xi(p.D_vr)) << ',' << fmt(m.lambda) << ','
       << fmt(spectrum::mode_residual(m, p)) << ',' << (m.degenerate_zero ? "yes" : "no") << '\n';
  }
  return os.str();
}

SweepParam parse_sweep_param(std::string_view name) {
  if (name == "theta") return SweepParam::Theta;
  if (name == "k_v") return SweepParam::K_v;
  if (name == "eps") return SweepParam::Eps;
  throw ConfigError("param", "expected theta, k_v or eps, got '" + std::string(name) + "'");
}

namespace {

const char* param_key(SweepParam p) {
  switch (p) {
    case SweepParam::Theta:
      return "theta";
    case SweepParam::K_v:
      return "k_v";
    case SweepParam::Eps:
      return "eps";
  }
  return "?";
}

SweepRow sweep_one(const RunConfig& base, SweepParam param, double value,
                   const std::optional<std::filesystem::path>& dir) {
  SweepRow row;
  row.value = value;
  try {
    RunConfig c = base;
    char text[64];
    std::snprintf(text, sizeof text, "%.17g", value);
    set_value(c, param_key(param), text);
    const AnalyzeReport a = analyze(c);
    row.unstable_count = a.unstable.count;
    const SimulateOutcome o = dir ? cmd_simulate(c, *dir, false) : simulate(c);
    const fdm::Grid grid = fdm::build_grid(c.params);
    const auto& U = o.result.final.state.U;
    row.converged = o.result.converged;
    row.jump_u = o.result.jump_u;
    row.jump_v = o.result.jump_v;
    row.variation_l = fdm::side_variation(U, grid, true);
    row.variation_r = fdm::side_variation(U, grid, false);
    row.crossings = fdm::sign_changes(U, o.steady.u_bar);
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> cmd_sweep(const RunConfig& config, SweepParam param, const std::vector<double>& values,
                                int jobs, const std::optional<std::filesystem::path>& out_dir) {
  if (values.empty() || values.size() > 64) throw ConfigError("values", "expected 1 to 64 values");
  if (out_dir) ensure_directory(*out_dir);
  std::vector<SweepRow> rows(values.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < values.size(); i = next++) {
      std::optional<std::filesystem::path> dir;
      if (out_dir) dir = *out_dir / ("run_" + std::to_string(i));
      rows[i] = sweep_one(config, param, values[i], dir);
    }
  };
  const int n = std::clamp(jobs, 1, static_cast<int>(values.size()));
  std::vector<std::jthread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (out_dir) write_text_file(*out_dir / "sweep.csv", format_sweep(param, rows));
  return rows;
}

std::string format_sweep(SweepParam param, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << param_key(param)
     << ",ok,unstable_count,converged,jump_u,jump_v,variation_l,variation_r,crossings,error\n";
  for (const auto& r : rows) {
    os << fmt(r.value) << ',' << (r.ok ? "yes" : "no") << ',';
    if (r.ok) {
      os << r.unstable_count << ',' << (r.converged ? "yes" : "no") << ',' << fmt(r.jump_u) << ','
         << fmt(r.jump_v) << ',' << fmt(r.variation_l) << ',' << fmt(r.variation_r) << ',' << r.crossings
         << ',';
    } else {
      os << ",,,,,,,";
    }
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    os << err << '\n';
  }
  return os.str();
}

}  // namespace memturing::cli
