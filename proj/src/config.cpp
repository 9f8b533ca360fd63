#include "memturing/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "memturing/errors.hpp"

namespace memturing::cli {

namespace {

struct KeyInfo {
  const char* name;
  const char* default_text;
  const char* help;
};

// Serialization order.
constexpr KeyInfo kKeys[] = {
    {"L", "1", "domain length"},
    {"x_m", "L/2", "membrane position"},
    {"D_vl", "1", "inhibitor diffusion, left"},
    {"D_vr", "1", "inhibitor diffusion, right"},
    {"theta", "0.078", "diffusion ratio D_u/D_v (both sides)"},
    {"k_v", "1", "inhibitor membrane permeability (1e8 = fully permeable)"},
    {"k_u", "theta*k_v", "activator membrane permeability"},
    {"eps", "1", "reaction time scale"},
    {"alpha", "1", "reaction amplitude in h(u) = alpha u (u-1)^2"},
    {"Theta_scheme", "1", "theta-method weight (1 = implicit Euler)"},
    {"dx", "1/200", "grid step (both segments)"},
    {"N_l", "x_m/dx - 1", "left cells minus one"},
    {"N_r", "(L-x_m)/dx - 1", "right cells minus one"},
    {"dt", "min(1e-2, eps/4)", "time step"},
    {"preset", "paper-fig3", "initial data: paper-fig3 | constant-plus-noise | eigenmode-perturbation"},
    {"T", "1000", "final time"},
    {"mode", "nonlinear", "reaction treatment: nonlinear | linearized"},
    {"mass", "0.8", "equilibrium mass for the perturbative presets"},
    {"seed", "12345", "noise seed for constant-plus-noise"},
    {"noise_amplitude", "0.01", "noise amplitude for constant-plus-noise"},
    {"perturb_mode", "1", "mode index for eigenmode-perturbation"},
    {"delta", "0.001", "amplitude for eigenmode-perturbation"},
    {"out", "out", "output directory"},
};

bool known_key(std::string_view key) {
  for (const auto& k : kKeys) {
    if (key == k.name) return true;
  }
  return false;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& text) {
  if (text.empty()) throw ConfigError(key, "missing value");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError(key, "not a finite number: '" + text + "'");
  }
  return v;
}

template <typename Int>
Int to_int(const std::string& key, const std::string& text) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(key, "not an integer: '" + text + "'");
  }
  return v;
}

std::string exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Entries = std::vector<std::pair<std::string, std::string>>;

Entries split_lines(std::string_view text) {
  Entries entries;
  std::map<std::string, int> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigError("", "line " + std::to_string(line_no) + ": empty key");
    if (!known_key(key)) throw ConfigError(key, "unknown key");
    if (seen[key]++) throw ConfigError(key, "given more than once");
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

}  // namespace

std::string describe_keys() {
  std::ostringstream os;
  for (const auto& k : kKeys) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "  %-16s default %-18s %s\n", k.name, k.default_text, k.help);
    os << buf;
  }
  return os.str();
}

RunConfig parse_config(std::string_view text) {
  const Entries entries = split_lines(text);
  std::map<std::string, std::string> kv(entries.begin(), entries.end());
  const auto has = [&](const char* k) { return kv.count(k) > 0; };
  const auto num = [&](const char* k) { return to_double(k, kv.at(k)); };

  RunConfig c;
  ModelParams& p = c.params;

  if (has("L")) p.L = num("L");
  p.x_m = has("x_m") ? num("x_m") : p.L / 2.0;
  if (!(p.L > 0)) throw ConfigError("L", "must be > 0");
  if (!(p.x_m > 0 && p.x_m < p.L)) throw ConfigError("x_m", "must satisfy 0 < x_m < L");

  const bool has_dx = has("dx");
  const bool has_nl = has("N_l");
  const bool has_nr = has("N_r");
  if (has_nl) p.N_l = to_int<int>("N_l", kv.at("N_l"));
  if (has_nr) p.N_r = to_int<int>("N_r", kv.at("N_r"));
  if (has_nl && p.N_l < 2) throw ConfigError("N_l", "must be >= 2");
  if (has_nr && p.N_r < 2) throw ConfigError("N_r", "must be >= 2");
  double dx = 1.0 / 200.0;
  if (has_dx) {
    dx = num("dx");
    if (!(dx > 0)) throw ConfigError("dx", "must be > 0");
  } else if (has_nl) {
    dx = p.x_m / (p.N_l + 1);
  } else if (has_nr) {
    dx = (p.L - p.x_m) / (p.N_r + 1);
  }
  {
    const int nl = p.N_l;
    const int nr = p.N_r;
    set_grid_step(p, dx);
    if (has_nl) p.N_l = nl;
    if (has_nr) p.N_r = nr;
  }

  if (has("D_vl")) p.D_vl = num("D_vl");
  if (has("D_vr")) p.D_vr = num("D_vr");
  if (has("theta")) p.theta = num("theta");
  if (has("k_v")) p.k_v = num("k_v");
  if (has("eps")) p.eps = num("eps");
  if (has("alpha")) p.alpha = num("alpha");
  if (has("Theta_scheme")) p.Theta_scheme = num("Theta_scheme");
  c.k_u_explicit = has("k_u");
  p.k_u = c.k_u_explicit ? num("k_u") : p.theta * p.k_v;
  c.dt_explicit = has("dt");
  p.dt = c.dt_explicit ? num("dt") : default_time_step(p.eps);

  if (has("preset")) {
    try {
      c.preset = model::parse_preset(kv.at("preset"));
    } catch (const DomainError& e) {
      throw ConfigError("preset", e.what());
    }
  }
  if (has("T")) c.T = num("T");
  if (has("mode")) {
    const std::string& m = kv.at("mode");
    if (m == "nonlinear") {
      c.mode = fdm::StepMode::Nonlinear;
    } else if (m == "linearized") {
      c.mode = fdm::StepMode::Linearized;
    } else {
      throw ConfigError("mode", "expected 'nonlinear' or 'linearized', got '" + m + "'");
    }
  }
  if (has("mass")) c.initial.mass = num("mass");
  if (has("seed")) c.initial.seed = to_int<std::uint64_t>("seed", kv.at("seed"));
  if (has("noise_amplitude")) c.initial.noise_amplitude = num("noise_amplitude");
  if (has("perturb_mode")) c.initial.mode = to_int<int>("perturb_mode", kv.at("perturb_mode"));
  if (has("delta")) c.initial.delta = num("delta");
  if (has("out")) {
    c.out_dir = kv.at("out");
    if (c.out_dir.empty()) throw ConfigError("out", "must not be empty");
  }

  if (!(c.T > 0)) throw ConfigError("T", "must be > 0");
  if (!(c.initial.mass > 0)) throw ConfigError("mass", "must be > 0");
  if (!(c.initial.noise_amplitude >= 0)) throw ConfigError("noise_amplitude", "must be >= 0");
  if (c.initial.mode < 1) throw ConfigError("perturb_mode", "must be >= 1");

  c.warnings = validate(p);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& c) {
  const ModelParams& p = c.params;
  std::ostringstream os;
  const auto line = [&](const char* key, const std::string& value) { os << key << " = " << value << '\n'; };
  line("L", exact(p.L));
  line("x_m", exact(p.x_m));
  line("D_vl", exact(p.D_vl));
  line("D_vr", exact(p.D_vr));
  line("theta", exact(p.theta));
  line("k_v", exact(p.k_v));
  if (c.k_u_explicit) line("k_u", exact(p.k_u));
  line("eps", exact(p.eps));
  line("alpha", exact(p.alpha));
  line("Theta_scheme", exact(p.Theta_scheme));
  line("dx", exact(p.dx));
  line("N_l", std::to_string(p.N_l));
  line("N_r", std::to_string(p.N_r));
  if (c.dt_explicit) line("dt", exact(p.dt));
  line("preset", std::string(model::preset_name(c.preset)));
  line("T", exact(c.T));
  line("mode", c.mode == fdm::StepMode::Nonlinear ? "nonlinear" : "linearized");
  line("mass", exact(c.initial.mass));
  line("seed", std::to_string(c.initial.seed));
  line("noise_amplitude", exact(c.initial.noise_amplitude));
  line("perturb_mode", std::to_string(c.initial.mode));
  line("delta", exact(c.initial.delta));
  line("out", c.out_dir);
  return os.str();
}

void set_value(RunConfig& config, std::string_view key, std::string_view value) {
  if (!known_key(key)) throw ConfigError(std::string(key), "unknown key");
  Entries entries = split_lines(serialize_config(config));
  bool replaced = false;
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = std::string(value);
      replaced = true;
    }
  }
  if (!replaced) entries.emplace_back(std::string(key), std::string(value));
  std::string text;
  for (const auto& [k, v] : entries) text += k + " = " + v + "\n";
  config = parse_config(text);
}

}  // namespace memturing::cli
