#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "memturing/errors.hpp"
#include "memturing/model.hpp"
#include "memturing/stability.hpp"

using namespace memturing;
using stability::Jacobian;

namespace {

// Minimum of the convex p over eta > 0, by ternary search.
double min_p(double theta, const Jacobian& J) {
  double lo = 0.0, hi = 1e6;
  for (int i = 0; i < 400; ++i) {
    const double a = lo + (hi - lo) / 3, b = hi - (hi - lo) / 3;
    const auto p = [&](double e) { return theta * e * e - e * (J.fu + theta * J.gv) + J.det(); };
    (p(a) < p(b) ? hi : lo) = (p(a) < p(b) ? b : a);
  }
  const double e = 0.5 * (lo + hi);
  return theta * e * e - e * (J.fu + theta * J.gv) + J.det();
}

// Largest theta for which some eta > 0 makes p negative.
double scan_theta_c(const Jacobian& J) {
  double lo = 1e-9, hi = 1e3;
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);
    (min_p(mid, J) < 0 ? lo : hi) = mid;
  }
  return lo;
}

const Jacobian kGeneric{1.0, -1.0, 2.0, -1.5};

Jacobian reference_jacobian() { return model::steady_state(0.8, 1.0, 1.0).jac; }

}  // namespace

TEST(OdeStability, ReferenceIsBorderlineStable) {
  const auto r = stability::ode_stability(reference_jacobian());
  EXPECT_TRUE(r.stable);
  EXPECT_TRUE(r.det_borderline);
  EXPECT_TRUE(r.activator_inhibitor);
  EXPECT_LT(r.tr, 0);
}

TEST(OdeStability, Classification) {
  EXPECT_TRUE(stability::ode_stability(kGeneric).stable);
  EXPECT_FALSE(stability::ode_stability(kGeneric).det_borderline);
  EXPECT_FALSE(stability::ode_stability(Jacobian{1.0, -1.0, 2.0, 0.5}).stable);   // tr > 0
  EXPECT_FALSE(stability::ode_stability(Jacobian{-1.0, 1.0, 1.0, -0.5}).stable);  // det < 0
}

TEST(Dispersion, RootsSolveTheQuadratic) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-3, 3), pos(0, 50);
  for (int i = 0; i < 500; ++i) {
    const Jacobian J{u(gen), u(gen), u(gen), u(gen)};
    const double eta = pos(gen), theta = 1e-3 + std::abs(u(gen));
    const auto d = stability::dispersion(eta, theta, J);
    const double b = eta * (1 + theta) - J.trace();
    const double c = stability::p_polynomial(eta, theta, J);
    for (auto mu : {d.mu_plus, d.mu_minus}) {
      const auto res = mu * mu + b * mu + c;
      EXPECT_LT(std::abs(res), 1e-9 * (1 + std::abs(b) * std::abs(mu) + std::abs(c)));
    }
    EXPECT_GE(d.mu_plus.real(), d.mu_minus.real());
    EXPECT_EQ(d.max_re, d.mu_plus.real());
  }
}

TEST(Dispersion, MatchesTwoByTwoEigenvalues) {
  // Eigenvalues of [[fu - theta eta, fv], [gu, gv - eta]] in closed form.
  const double eta = 2.0, theta = 0.05;
  const double a = kGeneric.fu - theta * eta, b = kGeneric.fv, c = kGeneric.gu, d = kGeneric.gv - eta;
  const double tr = a + d, det = a * d - b * c;
  const double disc = tr * tr - 4 * det;
  ASSERT_GT(disc, 0);
  const auto r = stability::dispersion(eta, theta, kGeneric);
  EXPECT_NEAR(r.mu_plus.real(), 0.5 * (tr + std::sqrt(disc)), 1e-12);
  EXPECT_NEAR(r.mu_minus.real(), 0.5 * (tr - std::sqrt(disc)), 1e-12);
}

TEST(ThetaCritical, GenericJacobianAgainstScan) {
  const double tc = stability::theta_critical(kGeneric);
  EXPECT_NEAR(tc, 2.0 / 9.0, 1e-12);
  EXPECT_NEAR(tc, scan_theta_c(kGeneric), 1e-7);
}

TEST(ThetaCritical, ReferenceEqualsMinusHPrime) {
  const auto s = model::steady_state(0.8, 1.0, 1.0);
  const double tc = stability::theta_critical(s.jac);
  EXPECT_NEAR(tc, -model::h_prime(s.u_bar, 1.0), 1e-9);
  EXPECT_NEAR(tc, 0.3101, 1e-3);
  EXPECT_NEAR(tc, scan_theta_c(s.jac), 1e-7);
}

TEST(ThetaCritical, ThrowsWhenNotActivatorInhibitor) {
  // fu < 0 and gv < 0: diffusion cannot destabilise.
  EXPECT_THROW(stability::theta_critical(Jacobian{-1.0, 1.0, -1.0, -1.0}), DomainError);
}

TEST(InstabilityRange, PolynomialSignPattern) {
  for (double theta : {1e-3, 1e-2, 0.1, 0.2}) {
    const auto r = stability::instability_range(theta, kGeneric);
    ASSERT_FALSE(r.empty) << theta;
    EXPECT_NEAR(stability::p_polynomial(r.eta_minus, theta, kGeneric), 0.0, 1e-9 * (1 + r.eta_plus));
    EXPECT_NEAR(stability::p_polynomial(r.eta_plus, theta, kGeneric), 0.0,
                1e-9 * (1 + theta * r.eta_plus * r.eta_plus));
    for (int i = 1; i < 100; ++i) {
      const double eta = r.eta_minus + (r.eta_plus - r.eta_minus) * i / 100.0;
      EXPECT_LT(stability::p_polynomial(eta, theta, kGeneric), 0.0);
    }
    EXPECT_GT(stability::p_polynomial(0.5 * r.eta_minus, theta, kGeneric), 0.0);
    EXPECT_GT(stability::p_polynomial(2 * r.eta_plus, theta, kGeneric), 0.0);
  }
  EXPECT_TRUE(stability::instability_range(0.23, kGeneric).empty);
  EXPECT_TRUE(stability::instability_range(3.0, kGeneric).empty);
}

TEST(InstabilityRange, ReferenceCases) {
  const auto s = model::steady_state(0.8, 1.0, 1.0);
  const double hp = model::h_prime(s.u_bar, 1.0);
  // det = 0, so eta_minus = 0 and eta_plus = -(1 + h'/theta) / eps.
  for (double theta : {7.8e-2, 3e-4, 1e-5}) {
    const auto r = stability::instability_range(theta, s.jac);
    ASSERT_FALSE(r.empty);
    EXPECT_EQ(r.eta_minus, 0.0);
    EXPECT_NEAR(r.eta_plus, -(1 + hp / theta), 1e-10 * r.eta_plus);
  }
  EXPECT_NEAR(stability::instability_range(7.8e-2, s.jac).eta_plus, 2.97, 0.01);
  EXPECT_NEAR(stability::instability_range(3e-4, s.jac).eta_plus, 1032.6, 0.5);
  EXPECT_NEAR(stability::instability_range(1e-5, s.jac).eta_plus, 31009, 10);
  EXPECT_TRUE(stability::instability_range(stability::theta_critical(s.jac), s.jac).empty);
}

TEST(InstabilityRange, FastReactionScalesWithInverseEps) {
  const auto s1 = model::steady_state(0.8, 1.0, 1.0);
  const auto s2 = model::steady_state(0.8, 0.05, 1.0);
  const auto r1 = stability::instability_range(1e-3, s1.jac);
  const auto r2 = stability::instability_range(1e-3, s2.jac);
  EXPECT_NEAR(r2.eta_plus, 20 * r1.eta_plus, 1e-9 * r2.eta_plus);
}

TEST(ModeEigenvector, IsAnEigenvectorOfTheModeMatrix) {
  const auto s = model::steady_state(0.8, 1.0, 1.0);
  const double theta = 3e-4;
  for (double eta : {10.0, 200.0, 900.0, 5000.0}) {
    const auto d = stability::dispersion(eta, theta, s.jac);
    const auto v = stability::mode_eigenvector(eta, theta, s.jac);
    const double mu = d.mu_plus.real();
    const double r1 = (s.jac.fu - theta * eta) * v.a + s.jac.fv * v.b - mu * v.a;
    const double r2 = s.jac.gu * v.a + (s.jac.gv - eta) * v.b - mu * v.b;
    EXPECT_NEAR(r1, 0.0, 1e-9 * (1 + eta));
    EXPECT_NEAR(r2, 0.0, 1e-9 * (1 + eta));
    EXPECT_NEAR(std::hypot(v.a, v.b), 1.0, 1e-14);
    EXPECT_GE(v.a, 0.0);
  }
}
