#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sdiep/dense_matrix.hpp"
#include "sdiep/spectrum.hpp"

namespace sdiep {

enum class Distribution {
  Uniform01, ///< X ~ U[0, 1)
  Power,     ///< X = U^p, skewed towards 0 for p > 1
};

std::string_view to_string(Distribution d);
/// Accepts "uniform" and "power". Throws std::invalid_argument otherwise.
Distribution parse_distribution(std::string_view name);

/// Settings for drawing lambda_i = alpha * X_i / (X_1 + ... + X_{n-1}).
struct GenConfig {
  std::size_t n = 2;
  double alpha = -0.5;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::Uniform01;
  double power = 3.0; // exponent for Distribution::Power

  /// Throws std::invalid_argument unless n >= 2, alpha in [-1/2, 1/2] and
  /// power > 0.
  void validate() const;
};

/// (1, lambda_1, ..., lambda_{n-1}) with lambda_i = alpha X_i / S_n. The tail
/// sums to alpha up to rounding, so for alpha <= 0 the result is a
/// (1 + alpha)-Suleimanova spectrum. A draw with S_n = 0 is repeated a
/// bounded number of times before giving up with std::runtime_error.
Spectrum random_spectrum(const GenConfig& cfg);

/// construct(random_spectrum(cfg)). Doubly stochastic for every alpha in
/// [-1/2, 1/2].
DenseMatrix random_matrix(const GenConfig& cfg);

/// `count` matrices; matrix i uses seed derive_seed(cfg.seed, i).
std::vector<DenseMatrix> random_matrices(const GenConfig& cfg, std::size_t count);

} // namespace sdiep
