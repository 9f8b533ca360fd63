#include <gtest/gtest.h>

#include <random>

#include "memturing/config.hpp"
#include "memturing/errors.hpp"

using namespace memturing;
using cli::parse_config;

namespace {

std::string error_key(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<no error>";
}

}  // namespace

TEST(Config, EmptyFileGivesReferenceDefaults) {
  const auto c = parse_config("");
  const auto& p = c.params;
  EXPECT_EQ(p.L, 1.0);
  EXPECT_EQ(p.x_m, 0.5);
  EXPECT_EQ(p.D_vl, 1.0);
  EXPECT_EQ(p.D_vr, 1.0);
  EXPECT_EQ(p.eps, 1.0);
  EXPECT_EQ(p.alpha, 1.0);
  EXPECT_EQ(p.Theta_scheme, 1.0);
  EXPECT_EQ(p.dx, 1.0 / 200);
  EXPECT_EQ(p.N_l, 99);
  EXPECT_EQ(p.N_r, 99);
  EXPECT_EQ(p.theta, 7.8e-2);
  EXPECT_EQ(p.k_v, 1.0);
  EXPECT_EQ(p.k_u, 7.8e-2);
  EXPECT_EQ(p.dt, 1e-2);
  EXPECT_EQ(c.preset, model::InitialPreset::Wave);
  EXPECT_EQ(c.T, 1000.0);
  EXPECT_TRUE(c.warnings.empty());
}

TEST(Config, ThetaTracksIntoKu) {
  const auto c = parse_config("theta = 3e-4\n");
  EXPECT_EQ(c.params.theta, 3e-4);
  EXPECT_EQ(c.params.k_u, 3e-4);
  EXPECT_FALSE(c.k_u_explicit);
}

TEST(Config, CommentsAndWhitespace) {
  const auto c = parse_config("# case 3\n  theta=3e-4   # small\n\n\tk_v =  10 \n");
  EXPECT_EQ(c.params.theta, 3e-4);
  EXPECT_EQ(c.params.k_v, 10.0);
  EXPECT_NEAR(c.params.k_u, 3e-3, 1e-18);
}

TEST(Config, EpsSetsDefaultStep) {
  EXPECT_EQ(parse_config("eps = 0.01").params.dt, 0.0025);
  EXPECT_EQ(parse_config("eps = 0.01\ndt = 1e-4").params.dt, 1e-4);
}

TEST(Config, GridFromCellCounts) {
  const auto c = parse_config("N_l = 199\n");
  EXPECT_EQ(c.params.N_r, 199);
  EXPECT_DOUBLE_EQ(c.params.dx, 1.0 / 400);
  const auto d = parse_config("dx = 0.0025\n");
  EXPECT_EQ(d.params.N_l, 199);
  const auto e = parse_config("L = 2\n");
  EXPECT_EQ(e.params.x_m, 1.0);
  EXPECT_EQ(e.params.N_l, 199);
}

TEST(Config, ErrorsNameTheKey) {
  EXPECT_EQ(error_key("theta = -1"), "theta");
  EXPECT_EQ(error_key("theta = abc"), "theta");
  EXPECT_EQ(error_key("theta = 1e-3x"), "theta");
  EXPECT_EQ(error_key("thta = 1"), "thta");
  EXPECT_EQ(error_key("theta = 1\ntheta = 2"), "theta");
  EXPECT_EQ(error_key("eps = 0"), "eps");
  EXPECT_EQ(error_key("x_m = 1.5"), "x_m");
  EXPECT_EQ(error_key("preset = fig3"), "preset");
  EXPECT_EQ(error_key("mode = implicit"), "mode");
  EXPECT_EQ(error_key("N_l = 50\nN_r = 60"), "N_r");
  EXPECT_EQ(error_key("dx = 0.3"), "N_l");
  EXPECT_EQ(error_key("Theta_scheme = 2"), "Theta_scheme");
  EXPECT_EQ(error_key("seed = -1"), "seed");
  EXPECT_EQ(error_key("T = 0"), "T");
  EXPECT_THROW(parse_config("theta 1"), ConfigError);
}

TEST(Config, WarningsAreNotErrors) {
  const auto c = parse_config("k_u = 0.5\ndt = 0.9\n");
  EXPECT_EQ(c.warnings.size(), 2u);
}

TEST(Config, SerializeRoundTrip) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(0, 1);
  const char* presets[] = {"paper-fig3", "constant-plus-noise", "eigenmode-perturbation"};
  for (int i = 0; i < 200; ++i) {
    std::string text;
    text += "theta = " + std::to_string(1e-5 + u(gen)) + "\n";
    if (u(gen) < 0.5) text += "k_v = " + std::to_string(100 * u(gen)) + "\n";
    if (u(gen) < 0.3) text += "k_u = " + std::to_string(u(gen)) + "\n";
    if (u(gen) < 0.5) text += "eps = " + std::to_string(0.01 + u(gen)) + "\n";
    if (u(gen) < 0.3) text += "dt = " + std::to_string(1e-4 + 1e-3 * u(gen)) + "\n";
    if (u(gen) < 0.3) text += "N_l = " + std::to_string(10 + static_cast<int>(300 * u(gen))) + "\n";
    if (u(gen) < 0.3) text += "D_vr = " + std::to_string(0.1 + u(gen)) + "\n";
    text += std::string("preset = ") + presets[i % 3] + "\n";
    if (u(gen) < 0.5) text += "seed = " + std::to_string(gen()) + "\n";
    if (u(gen) < 0.3) text += "mode = linearized\n";
    if (u(gen) < 0.3) text += "out = runs/r" + std::to_string(i) + "\n";
    const auto a = parse_config(text);
    const std::string s1 = cli::serialize_config(a);
    const auto b = parse_config(s1);
    EXPECT_EQ(cli::serialize_config(b), s1);
    EXPECT_EQ(a.params.theta, b.params.theta);
    EXPECT_EQ(a.params.k_u, b.params.k_u);
    EXPECT_EQ(a.params.dt, b.params.dt);
    EXPECT_EQ(a.params.dx, b.params.dx);
    EXPECT_EQ(a.params.N_l, b.params.N_l);
    EXPECT_EQ(a.initial.seed, b.initial.seed);
    EXPECT_EQ(a.k_u_explicit, b.k_u_explicit);
    EXPECT_EQ(a.dt_explicit, b.dt_explicit);
    EXPECT_EQ(a.out_dir, b.out_dir);
    EXPECT_EQ(a.mode, b.mode);
  }
}

TEST(Config, SetValueRederivesCoupledFields) {
  auto c = parse_config("theta = 3e-4\n");
  cli::set_value(c, "k_v", "10");
  EXPECT_NEAR(c.params.k_u, 3e-3, 1e-18);
  cli::set_value(c, "eps", "0.01");
  EXPECT_EQ(c.params.dt, 0.0025);
  EXPECT_THROW(cli::set_value(c, "theta", "-2"), ConfigError);
  EXPECT_THROW(cli::set_value(c, "bogus", "1"), ConfigError);
}

TEST(Config, KeyListMentionsEveryKey) {
  const std::string keys = cli::describe_keys();
  for (const char* k : {"theta", "k_v", "k_u", "eps", "dt", "preset", "seed", "T", "out", "Theta_scheme"}) {
    EXPECT_NE(keys.find(k), std::string::npos) << k;
  }
}
