#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "memturing/fdm.hpp"
#include "memturing/model.hpp"
#include "memturing/params.hpp"

namespace memturing::cli {

/// Everything one invocation needs. Text form: `key = value` lines, `#`
/// starts a comment.
struct RunConfig {
  ModelParams params;
  model::InitialPreset preset = model::InitialPreset::Wave;
  model::InitialDataOptions initial;
  double T = 1000.0;
  std::string out_dir = "out";
  fdm::StepMode mode = fdm::StepMode::Nonlinear;
  /// k_u given explicitly; otherwise it tracks theta * k_v.
  bool k_u_explicit = false;
  /// dt given explicitly; otherwise it tracks min(1e-2, eps/4).
  bool dt_explicit = false;
  std::vector<std::string> warnings;
};

/// Every accepted key with its default and meaning, one per line.
std::string describe_keys();

/// Throws ConfigError naming the offending key.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Round-trips through parse_config.
std::string serialize_config(const RunConfig& config);

/// Sets one key after parsing, re-deriving the coupled k_u and the default
/// dt, then re-validating.
void set_value(RunConfig& config, std::string_view key, std::string_view value);

}  // namespace memturing::cli
