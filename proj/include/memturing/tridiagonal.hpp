#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace memturing {

/// Square tridiagonal matrix. lower[i] = A(i, i-1) (lower[0] unused),
/// upper[i] = A(i, i+1) (upper[n-1] unused).
struct Tridiagonal {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  Tridiagonal() = default;
  explicit Tridiagonal(std::size_t n) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}

  std::size_t size() const { return diag.size(); }
  std::vector<double> multiply(std::span<const double> x) const;
  void multiply(std::span<const double> x, std::span<double> out) const;
};

/// LU factorisation for repeated Thomas solves with the same matrix.
class TridiagonalFactor {
 public:
  /// Throws DomainError on a zero pivot.
  explicit TridiagonalFactor(const Tridiagonal& m);

  std::size_t size() const { return pivot_.size(); }
  void solve(std::span<const double> rhs, std::span<double> out) const;
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> pivot_;
};

/// Forward elimination / back substitution.
std::vector<double> thomas_solve(const Tridiagonal& m, std::span<const double> rhs);

/// Eigenvalues of the symmetric tridiagonal matrix (diag, off), off[i] linking
/// rows i and i+1, in ascending order. Implicit-shift QL iteration.
std::vector<double> symmetric_tridiagonal_eigenvalues(std::span<const double> diag,
                                                      std::span<const double> off);

}  // namespace memturing
