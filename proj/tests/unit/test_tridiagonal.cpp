#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "memturing/errors.hpp"
#include "memturing/tridiagonal.hpp"

using namespace memturing;

namespace {

// Dense Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(const Tridiagonal& m, std::vector<double> b) {
  const std::size_t n = m.size();
  std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    A[i][i] = m.diag[i];
    if (i > 0) A[i][i - 1] = m.lower[i];
    if (i + 1 < n) A[i][i + 1] = m.upper[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(A[r][k]) > std::abs(A[piv][k])) piv = r;
    }
    std::swap(A[k], A[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = A[r][k] / A[k][k];
      for (std::size_t c = k; c < n; ++c) A[r][c] -= f * A[k][c];
      b[r] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t c = k + 1; c < n; ++c) s -= A[k][c] * x[c];
    x[k] = s / A[k][k];
  }
  return x;
}

Tridiagonal random_dominant(std::size_t n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1, 1);
  Tridiagonal m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.lower[i] = i > 0 ? u(gen) : 0.0;
    m.upper[i] = i + 1 < n ? u(gen) : 0.0;
    m.diag[i] = std::abs(m.lower[i]) + std::abs(m.upper[i]) + 0.1 + std::abs(u(gen));
    if (u(gen) < 0) m.diag[i] = -m.diag[i];
  }
  return m;
}

// Number of eigenvalues below x (Sturm sequence of leading minors).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double off = i > 0 ? e[i - 1] * e[i - 1] : 0.0;
    q = d[i] - x - (i > 0 ? off / q : 0.0);
    if (q == 0.0) q = 1e-300;
    if (q < 0) ++count;
  }
  return count;
}

}  // namespace

TEST(Thomas, AgreesWithDenseElimination) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(-5, 5);
  for (std::size_t n : {1u, 2u, 3u, 10u, 57u, 200u}) {
    const Tridiagonal m = random_dominant(n, gen);
    std::vector<double> b(n);
    for (double& x : b) x = u(gen);
    const auto oracle = dense_solve(m, b);
    const auto x1 = thomas_solve(m, b);
    const auto x2 = TridiagonalFactor(m).solve(b);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(x1[i], oracle[i], 1e-11 * (1 + std::abs(oracle[i])));
      EXPECT_NEAR(x2[i], oracle[i], 1e-11 * (1 + std::abs(oracle[i])));
    }
  }
}

TEST(Thomas, SolveInvertsMultiply) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-1, 1);
  const Tridiagonal m = random_dominant(300, gen);
  std::vector<double> x(300);
  for (double& v : x) v = u(gen);
  const auto back = TridiagonalFactor(m).solve(m.multiply(x));
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(back[i], x[i], 1e-12);
}

TEST(Thomas, ZeroPivotThrows) {
  Tridiagonal m(3);
  m.diag = {0.0, 1.0, 1.0};
  m.upper = {1.0, 1.0, 0.0};
  m.lower = {0.0, 1.0, 1.0};
  EXPECT_THROW(TridiagonalFactor{m}, DomainError);
}

TEST(SymmetricEigen, DirichletLaplacianClosedForm) {
  const std::size_t n = 120;
  std::vector<double> d(n, 2.0), e(n - 1, -1.0);
  const auto ev = symmetric_tridiagonal_eigenvalues(d, e);
  ASSERT_EQ(ev.size(), n);
  for (std::size_t k = 0; k < n; ++k) {
    const double exact = 2.0 - 2.0 * std::cos(M_PI * static_cast<double>(k + 1) / (n + 1));
    EXPECT_NEAR(ev[k], exact, 1e-12);
  }
}

TEST(SymmetricEigen, RandomMatricesAgainstSturmCounts) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> u(-3, 3);
  for (std::size_t n : {1u, 2u, 5u, 40u, 150u}) {
    std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
    for (double& x : d) x = u(gen);
    for (double& x : e) x = u(gen);
    const auto ev = symmetric_tridiagonal_eigenvalues(d, e);
    ASSERT_EQ(ev.size(), n);
    EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
    double trace = 0, sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += d[i];
      sum += ev[i];
      const double tol = 1e-9;
      EXPECT_LE(sturm_count(d, e, ev[i] - tol), static_cast<int>(i));
      EXPECT_GE(sturm_count(d, e, ev[i] + tol), static_cast<int>(i + 1));
    }
    EXPECT_NEAR(sum, trace, 1e-10 * n);
  }
}
