#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sdiep {

/// Candidate spectrum (1, lambda_1, ..., lambda_{n-1}), indexed from zero.
///
/// values[0] is the Perron eigenvalue and must be exactly 1; every other
/// value must lie in [-1, 1]. Order is preserved as given: the constructor
/// never sorts, since the realisation does not need a normalised list.
class Spectrum {
public:
  /// Throws std::invalid_argument when the invariants do not hold.
  explicit Spectrum(std::vector<double> values);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }

  /// The non-Perron part, values[1..n-1].
  [[nodiscard]] std::span<const double> tail() const noexcept {
    return std::span<const double>(values_).subspan(1);
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
  std::vector<double> values_;
};

struct SpectrumClass {
  bool is_suleimanova = false;     // every tail value <= 0
  double delta = 1.0;              // 1 + sum of tail
  bool is_normalized = false;      // tail non-increasing
  bool is_nonnegative_case = false; // every tail value >= 0
};

/// Parses "1, -0.02, -0.03". Whitespace around tokens is ignored.
/// Throws ParseError on a malformed token and std::invalid_argument when
/// the parsed list violates the Spectrum invariants.
Spectrum parse_spectrum(std::string_view text);

/// Reads one spectrum per non-blank line. Lines starting with '#' are skipped.
std::vector<Spectrum> parse_spectrum_lines(std::string_view text);

/// Comma-separated, each value in its shortest round-trip form, so
/// parse_spectrum reproduces the values exactly.
std::string format_spectrum(const Spectrum& s);

SpectrumClass classify(const Spectrum& s);

struct TraceMomentResult {
  bool ok = true;
  std::optional<int> first_failing_power;
};

/// Checks 1 + sum_i values[i]^k >= 0 for k = 1..max_k (trace of A^k of a
/// nonnegative A cannot be negative).
TraceMomentResult trace_moment_check(const Spectrum& s, int max_k);

} // namespace sdiep
