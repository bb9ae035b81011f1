#include "sdiep/rw_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sdiep {

WalkMatrix walk_matrix(std::size_t n) {
  if (n < 3) throw std::invalid_argument("walk matrix needs n >= 3");
  DenseMatrix p(n);
  for (std::size_t r = 0; r < n; ++r) {
    p(r, (r + 1) % n) = 0.5;
    p(r, (r + n - 1) % n) = 0.5;
  }
  return {std::move(p)};
}

double phase_sine(std::size_t n, std::size_t j, std::size_t k) {
  const auto reduced = static_cast<double>((j % n) * (k % n) % n);
  return std::sin(2.0 * std::numbers::pi * reduced / static_cast<double>(n) + std::numbers::pi / 4.0);
}

DenseMatrix phase_sine_table(std::size_t n) {
  // Only n distinct values occur; look them up by the reduced product.
  std::vector<double> by_residue(n);
  for (std::size_t r = 0; r < n; ++r) by_residue[r] = phase_sine(n, r, 1);
  DenseMatrix t(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) t(j, k) = by_residue[j * k % n];
  return t;
}

OrthonormalBasis build_basis(std::size_t n) {
  if (n == 0) throw std::invalid_argument("basis needs n >= 1");
  OrthonormalBasis b{phase_sine_table(n), std::vector<double>(n)};
  const double scale = std::sqrt(2.0 / static_cast<double>(n));
  for (double& v : b.q.entries()) v *= scale;
  for (std::size_t k = 0; k < n; ++k) {
    b.eigvals[k] = std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }
  return b;
}

double max_eigenpair_residual(const OrthonormalBasis& basis, const WalkMatrix& walk) {
  const std::size_t n = basis.size();
  if (walk.size() != n || basis.eigvals.size() != n) {
    throw std::invalid_argument("basis and walk matrix dimensions differ");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      double pw = 0.0;
      for (std::size_t j = 0; j < n; ++j) pw += walk.entries(i, j) * basis.q(j, k);
      worst = std::max(worst, std::abs(pw - basis.eigvals[k] * basis.q(i, k)));
    }
  }
  return worst;
}

bool verify_eigenpairs(const OrthonormalBasis& basis, const WalkMatrix& walk, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  return max_eigenpair_residual(basis, walk) <= tol;
}

double orthonormality_defect(const OrthonormalBasis& basis) {
  const std::size_t n = basis.size();
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += basis.q(i, a) * basis.q(i, b);
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

} // namespace sdiep
