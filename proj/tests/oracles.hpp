#pragma once

// Test-only reference computations. Each one follows the textbook
// definition directly and shares no code path with the library routine it
// is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "sdiep/dense_matrix.hpp"
#include "sdiep/rng.hpp"
#include "sdiep/spectrum.hpp"

namespace sdiep::oracle {

/// w_k^(j) = sqrt(2/n) sin(2 pi k j / n + pi/4), without integer reduction.
inline DenseMatrix naive_basis(std::size_t n) {
  DenseMatrix q(n);
  const double nd = static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      q(j, k) = std::sqrt(2.0 / nd) *
                std::sin(2.0 * std::numbers::pi * static_cast<double>(k * j) / nd + std::numbers::pi / 4.0);
  return q;
}

/// Real part of the Fourier eigenvector: u_k^(j) = cos(2 pi k j / n).
inline std::vector<double> cosine_vector(std::size_t n, std::size_t k) {
  std::vector<double> u(n);
  for (std::size_t j = 0; j < n; ++j)
    u[j] = std::cos(2.0 * std::numbers::pi * static_cast<double>(k * j) / static_cast<double>(n));
  return u;
}

/// Imaginary part: v_k^(j) = sin(2 pi k j / n).
inline std::vector<double> sine_vector(std::size_t n, std::size_t k) {
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j)
    v[j] = std::sin(2.0 * std::numbers::pi * static_cast<double>(k * j) / static_cast<double>(n));
  return v;
}

/// Gram matrix G = A^T A, one dot product per entry.
inline DenseMatrix gram(const DenseMatrix& a) {
  const std::size_t n = a.size();
  DenseMatrix g(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += a(i, r) * a(i, c);
      g(r, c) = s;
    }
  return g;
}

/// sum_j lambda_j w_j w_j^T as explicit rank-one updates.
inline DenseMatrix rank_one_sum(const Spectrum& s) {
  const std::size_t n = s.size();
  const DenseMatrix q = naive_basis(n);
  DenseMatrix p(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) p(a, b) += s[j] * q(a, j) * q(b, j);
  return p;
}

inline std::vector<double> matvec(const DenseMatrix& m, const std::vector<double>& x) {
  std::vector<double> y(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

/// Random Suleimanova tail with the given sum (<= 0), magnitudes from a
/// uniform simplex draw.
inline Spectrum random_suleimanova(Rng& rng, std::size_t n, double tail_sum) {
  std::vector<double> e(n - 1);
  double total = 0.0;
  for (double& x : e) {
    x = rng.exponential();
    total += x;
  }
  std::vector<double> values(n);
  values[0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) values[i] = tail_sum * (e[i - 1] / total);
  return Spectrum(std::move(values));
}

} // namespace sdiep::oracle
