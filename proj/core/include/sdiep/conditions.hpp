#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdiep/constructor.hpp"
#include "sdiep/spectrum.hpp"

namespace sdiep {

/// Outcome of one scalar sufficient condition.
///
/// Conditions are affine in the eigenvalues; lhs is the evaluated left-hand
/// side and the condition holds iff lhs >= 0 (no tolerance band). When the
/// condition does not apply to the spectrum's size, both lhs and satisfied
/// are empty.
struct ConditionVerdict {
  std::string name;
  bool applicable = false;
  std::optional<double> lhs;
  std::optional<bool> satisfied;
};

// Every check below sorts a copy of the tail into non-increasing order and
// reads it with one-based subscripts: lambda_1 = 1, lambda_2 >= ... >=
// lambda_n. The input is never modified.

/// Perfect-Mirsky: 1/n + sum_{j=2}^{n} lambda_j / ((n-j+2)(n-j+1)) >= 0.
ConditionVerdict perfect_mirsky(const Spectrum& s);

/// Soules, with m = (n-1)/2 for odd n and (n-2)/2 for even n:
///   1/n + (n-m-1)/(n(m+1)) lambda_2 + sum_k lambda_{n-2k+2} / ((k+1)k) >= 0.
/// The sum runs over the k >= 1 whose subscript stays in [3, n]. n >= 3.
ConditionVerdict soules(const Spectrum& s);

/// Nader et al. improved Soules condition for even n >= 4.
ConditionVerdict nader_improved_soules_even(const Spectrum& s);

/// Nader et al. "new condition 1" for odd n >= 5.
ConditionVerdict nader_new1_odd(const Spectrum& s);

/// Nader et al. "new condition 2"; one formula per residue of n mod 4,
/// applicable when n = 4m + r with integer m > 1.
ConditionVerdict nader_new2(const Spectrum& s);

/// Nader et al. "new condition 3" in its n = 26 instance:
///   1/26 + lambda_2/26 + 6/91 lambda_4 + 3/28 lambda_8 + lambda_16/4 + lambda_26/2.
ConditionVerdict nader_new3_n26(const Spectrum& s);

struct ConditionReport {
  /// perfect_mirsky, soules, nader_improved_soules_even, nader_new1_odd,
  /// nader_new2, nader_new3_n26, in that order.
  std::vector<ConditionVerdict> classical;
  CorollaryVerdict corollary = CorollaryVerdict::NotCovered;
  FeasibilityCertificate feasibility;

  /// True when at least one classical condition applies and none holds.
  [[nodiscard]] bool all_applicable_classical_fail() const;
};

ConditionReport full_report(const Spectrum& s);

} // namespace sdiep
