#pragma once

#include <cstdint>
#include <random>

namespace sdiep {

// Reproducible random numbers.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++
// standard. Doubles are taken from the top 53 bits of one engine output,
// u = (x >> 11) * 2^-53, instead of std::uniform_real_distribution, whose
// algorithm is implementation-defined. Child seeds come from the SplitMix64
// finaliser:
//
//   z  = master + (index + 1) * 0x9E3779B97F4A7C15
//   z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^= z >> 31
//
// so any (master, index) pair yields the same stream on every platform.

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for the index-th independent sub-stream of `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform01() noexcept {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Standard exponential variate.
  double exponential() noexcept;

  std::uint64_t next_u64() noexcept { return engine_(); }

private:
  std::mt19937_64 engine_;
};

} // namespace sdiep
