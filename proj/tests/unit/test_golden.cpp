#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "memturing/commands.hpp"
#include "memturing/config.hpp"
#include "memturing/grid.hpp"
#include "memturing/stability.hpp"

using namespace memturing;

namespace {

struct Profile {
  std::vector<double> u, v;  // cell values only, membrane trace rows dropped
};

Profile read_golden(const std::string& name) {
  std::ifstream in(std::string(MEMTURING_GOLDEN_DIR) + "/" + name + ".csv");
  EXPECT_TRUE(in.good()) << name;
  Profile p;
  std::string line;
  std::getline(in, line);
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t mid = rows.size() / 2;
    if (r == mid - 1 || r == mid) continue;  // the two x_m rows
    std::istringstream is(rows[r]);
    std::string x, side, u, v;
    std::getline(is, x, ',');
    std::getline(is, side, ',');
    std::getline(is, u, ',');
    std::getline(is, v, ',');
    p.u.push_back(std::stod(u));
    p.v.push_back(std::stod(v));
  }
  return p;
}

std::string theta_c_line() {
  char buf[64];
  std::snprintf(buf, sizeof buf, "theta = %.17g\n",
                stability::theta_critical(model::steady_state(0.8, 1.0, 1.0).jac));
  return buf;
}

void check_case(const std::string& name, const std::string& line, double refine_tol) {
  const Profile golden = read_golden(name);
  const auto fine = cli::simulate(cli::parse_config(line + "dx = 0.0025\n"));
  const auto& F = fine.result.final.state;
  ASSERT_EQ(F.U.size(), golden.u.size());
  double diff = 0;
  for (std::size_t i = 0; i < F.U.size(); ++i) {
    diff = std::max({diff, std::abs(F.U[i] - golden.u[i]), std::abs(F.V[i] - golden.v[i])});
  }
  // Rounded to 12 digits on disk.
  EXPECT_LT(diff, 1e-9) << name;

  // The desk resolution tracks the frozen fine profile (pairs of fine cells
  // average onto one coarse cell).
  const auto coarse = cli::simulate(cli::parse_config(line));
  const auto& C = coarse.result.final.state.U;
  ASSERT_EQ(2 * C.size(), golden.u.size());
  double span = 0, lo = INFINITY, hi = -INFINITY, err = 0;
  for (std::size_t i = 0; i < C.size(); ++i) {
    const double avg = 0.5 * (golden.u[2 * i] + golden.u[2 * i + 1]);
    err = std::max(err, std::abs(C[i] - avg));
    lo = std::min(lo, avg);
    hi = std::max(hi, avg);
  }
  span = hi - lo;
  EXPECT_LT(err, refine_tol) << name << " span " << span;
}

}  // namespace

TEST(Golden, CriticalRatio) { check_case("theta_c", theta_c_line(), 1e-8); }
TEST(Golden, CaseTwo) { check_case("case2", "theta = 7.8e-2\n", 1e-2); }
TEST(Golden, CaseThree) { check_case("case3", "theta = 3e-4\n", 5e-3); }
