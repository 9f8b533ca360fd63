// memturing: analyze, simulate and sweep the two-compartment membrane model.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "memturing/commands.hpp"
#include "memturing/config.hpp"
#include "memturing/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitBlowUp = 3;
constexpr int kExitIo = 4;

std::vector<double> parse_values(const std::string& list) {
  std::vector<double> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && (item[used] == ' ' || item[used] == '\t')) ++used;
    if (used == 0 || used != item.size()) {
      throw memturing::ConfigError("values", "not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

void print_warnings(const memturing::cli::RunConfig& c) {
  for (const auto& w : c.warnings) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  namespace mc = memturing::cli;

  CLI::App app{"Turing instability analysis and simulation across a permeable membrane"};
  app.footer("Config file: one 'key = value' per line, '#' starts a comment.\nKeys:\n" +
             mc::describe_keys() + "\nExit codes: 0 ok, 2 config error, 3 blow-up, 4 I/O error.");
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;

  auto* analyze = app.add_subcommand("analyze", "linear stability report");
  analyze->add_option("--config", config_path, "config file")->required();
  analyze->add_option("--out", out_dir, "also write report.txt here");

  bool svg = false;
  auto* simulate = app.add_subcommand("simulate", "run the time integrator");
  simulate->add_option("--config", config_path, "config file")->required();
  simulate->add_option("--out", out_dir, "output directory")->required();
  simulate->add_flag("--svg", svg, "also plot the final profiles");

  int n_max = 8;
  auto* spectrum = app.add_subcommand("spectrum", "membrane eigenvalues");
  spectrum->add_option("--config", config_path, "config file")->required();
  spectrum->add_option("--n-max", n_max, "highest mode index")->required();

  std::string param;
  std::string values;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* sweep = app.add_subcommand("sweep", "one simulation per parameter value");
  sweep->add_option("--config", config_path, "config file")->required();
  sweep->add_option("--param", param, "theta | k_v | eps")->required();
  sweep->add_option("--values", values, "comma separated values")->required();
  sweep->add_option("--jobs", jobs, "concurrent runs")->capture_default_str();
  sweep->add_option("--out", out_dir, "per-run outputs and sweep.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const mc::RunConfig config = mc::load_config(config_path);
    print_warnings(config);
    const std::optional<std::filesystem::path> out =
        out_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(out_dir);

    if (*analyze) {
      std::cout << mc::cmd_analyze(config, out);
    } else if (*simulate) {
      const auto o = mc::cmd_simulate(config, out_dir, svg);
      std::cout << o.report;
    } else if (*spectrum) {
      std::cout << mc::cmd_spectrum(config, n_max);
    } else if (*sweep) {
      const auto p = mc::parse_sweep_param(param);
      const auto rows = mc::cmd_sweep(config, p, parse_values(values), jobs, out);
      std::cout << mc::format_sweep(p, rows);
    }
  } catch (const memturing::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const memturing::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const memturing::BlowUpError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBlowUp;
  } catch (const memturing::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
