#include "memturing/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "memturing/errors.hpp"

namespace memturing {

void Tridiagonal::multiply(std::span<const double> x, std::span<double> out) const {
  const std::size_t n = size();
  if (x.size() != n || out.size() != n) throw DomainError("Tridiagonal::multiply: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * x[i];
    if (i > 0) acc += lower[i] * x[i - 1];
    if (i + 1 < n) acc += upper[i] * x[i + 1];
    out[i] = acc;
  }
}

std::vector<double> Tridiagonal::multiply(std::span<const double> x) const {
  std::vector<double> out(size());
  multiply(x, out);
  return out;
}

TridiagonalFactor::TridiagonalFactor(const Tridiagonal& m)
    : lower_(m.lower), upper_(m.size()), pivot_(m.size()) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    double p = m.diag[i];
    if (i > 0) p -= m.lower[i] * upper_[i - 1];
    if (p == 0.0 || !std::isfinite(p)) {
      throw DomainError("TridiagonalFactor: zero pivot at row " + std::to_string(i));
    }
    pivot_[i] = p;
    upper_[i] = i + 1 < n ? m.upper[i] / p : 0.0;
  }
}

void TridiagonalFactor::solve(std::span<const double> rhs, std::span<double> out) const {
  const std::size_t n = size();
  if (rhs.size() != n || out.size() != n) throw DomainError("TridiagonalFactor::solve: size mismatch");
  if (n == 0) return;
  out[0] = rhs[0] / pivot_[0];
  for (std::size_t i = 1; i < n; ++i) out[i] = (rhs[i] - lower_[i] * out[i - 1]) / pivot_[i];
  for (std::size_t i = n - 1; i-- > 0;) out[i] -= upper_[i] * out[i + 1];
}

std::vector<double> TridiagonalFactor::solve(std::span<const double> rhs) const {
  std::vector<double> out(size());
  solve(rhs, out);
  return out;
}

std::vector<double> thomas_solve(const Tridiagonal& m, std::span<const double> rhs) {
  return TridiagonalFactor(m).solve(rhs);
}

std::vector<double> symmetric_tridiagonal_eigenvalues(std::span<const double> diag,
                                                      std::span<const double> off) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (off.size() + 1 != n) throw DomainError("symmetric_tridiagonal_eigenvalues: need n-1 off-diagonals");

  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  std::copy(off.begin(), off.end(), e.begin());
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iterations > 60) throw DomainError("symmetric_tridiagonal_eigenvalues: no convergence");

      // Wilkinson-type shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace memturing
