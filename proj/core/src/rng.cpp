#include "sdiep/rng.hpp"

#include <cmath>

namespace sdiep {

std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
  // Rejection sampling keeps the draw unbiased and platform independent.
  const std::uint64_t limit = -bound % bound; // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= limit) return x % bound;
  }
}

double Rng::exponential() noexcept {
  // 1 - u lies in (0, 1], so the log is finite.
  return -std::log(1.0 - uniform01());
}

} // namespace sdiep
