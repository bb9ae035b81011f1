#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdiep/spectrum.hpp"

namespace sdiep {

/// S_j(k) = sin(2*pi*k*j/n + pi/4) for 0 <= j, k < n. Throws
/// std::invalid_argument on an index out of range.
double s_value(std::size_t n, std::size_t j, std::size_t k);

/// max over j in [1, n-1] and k, l in [0, n-1] of S_j(k) S_j(l). Equals 1
/// exactly when 8 divides n. n >= 3.
double max_s_product(std::size_t n);

/// Evidence about delta_min(n), the smallest delta for which every
/// delta-Suleimanova spectrum of length n is realised by construct().
///
/// `lower` is the largest delta seen on an infeasible Suleimanova spectrum,
/// so delta_min(n) >= lower. `upper` is the structural bound 1/2 and is
/// never tightened by the search; `heuristic_upper` is the smallest delta of
/// a feasible point rejected during local refinement and only indicates how
/// close the refinement got.
struct DeltaBracket {
  std::size_t n = 0;
  double lower = 0.0;
  double upper = 0.5;
  std::optional<double> heuristic_upper;
  std::optional<Spectrum> witness;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

struct SearchOptions {
  /// Worker threads for the sampling phase. The result does not depend on it.
  unsigned threads = 1;
  /// Spectra evaluated before the random trials, e.g. a known witness.
  std::vector<Spectrum> probes;
  double refine_step = 1e-3;
  int refine_rounds = 20;
};

/// Randomised search for infeasible Suleimanova spectra with large delta.
///
/// Trial t draws from an Rng seeded with derive_seed(seed, t): a target
/// delta uniform in [0, 1/2), then magnitudes that are either a uniform
/// simplex sample or concentrated (>= 90% of the mass on one coordinate).
/// The best infeasible candidate (ties to the lowest index, probes first) is
/// then refined coordinate-wise towards larger delta while staying
/// infeasible. Returns the trivial bracket (0, 1/2) without a witness if
/// nothing infeasible turns up. n >= 3, trials >= 1.
DeltaBracket bracket_delta_min(std::size_t n, std::size_t trials, std::uint64_t seed,
                               const SearchOptions& opts = {});

/// Samples 1/2-Suleimanova spectra of length n (tail summing to -1/2) and
/// keeps those that construct() realises while every applicable classical
/// sufficient condition fails. n >= 5. May return an empty list.
std::vector<Spectrum> separating_examples(std::size_t n, std::size_t trials,
                                          std::uint64_t seed);

} // namespace sdiep
