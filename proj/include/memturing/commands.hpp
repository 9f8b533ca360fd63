#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "memturing/config.hpp"
#include "memturing/fdm.hpp"
#include "memturing/spectrum.hpp"
#include "memturing/stability.hpp"

namespace memturing::cli {

struct AnalyzeReport {
  double M = 0.0;
  model::SteadyState steady;
  stability::OdeStabilityReport ode;
  /// NaN when no critical ratio exists.
  double theta_c = 0.0;
  stability::InstabilityRange range;
  std::vector<spectrum::EigenMode> modes;
  std::vector<double> residuals;
  spectrum::UnstableModes unstable;
  /// Index into `modes` with the largest growth rate, -1 when nothing grows.
  int dominant_mode = -1;
  double dominant_growth = 0.0;
  std::string verdict;
  /// Why the mode list is empty (asymmetric membrane setups), else empty.
  std::string spectrum_note;
};

/// Equilibrium mass of the configured initial data.
double initial_mass(const RunConfig& config);

AnalyzeReport analyze(const RunConfig& config);
std::string format_report(const RunConfig& config, const AnalyzeReport& report);

/// Writes report.txt into `out_dir` when given; returns the report text.
std::string cmd_analyze(const RunConfig& config, const std::optional<std::filesystem::path>& out_dir);

struct SimulateOutcome {
  fdm::SimResult result;
  model::SteadyState steady;
  double mass_drift = 0.0;
  std::string report;
};

/// Runs the configured simulation without touching the filesystem.
SimulateOutcome simulate(const RunConfig& config);

/// Snapshot CSVs, final.csv, report.txt and optionally final.svg in out_dir.
SimulateOutcome cmd_simulate(const RunConfig& config, const std::filesystem::path& out_dir,
                             bool svg);

/// Table of modes 0..n_max.
std::string cmd_spectrum(const RunConfig& config, int n_max);

enum class SweepParam { Theta, K_v, Eps };
SweepParam parse_sweep_param(std::string_view name);

struct SweepRow {
  double value = 0.0;
  bool ok = false;
  std::string error;
  int unstable_count = 0;
  bool converged = false;
  double jump_u = 0.0;
  double jump_v = 0.0;
  double variation_l = 0.0;
  double variation_r = 0.0;
  int crossings = 0;
};

/// One independent simulation per value, at most `jobs` at a time. Each run
/// writes into out_dir/run_<i>; the summary goes to out_dir/sweep.csv.
std::vector<SweepRow> cmd_sweep(const RunConfig& config, SweepParam param,
                                const std::vector<double>& values, int jobs,
                                const std::optional<std::filesystem::path>& out_dir);

std::string format_sweep(SweepParam param, const std::vector<SweepRow>& rows);

}  // namespace memturing::cli
