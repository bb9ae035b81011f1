#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sdiep/dense_matrix.hpp"
#include "sdiep/spectrum.hpp"

namespace sdiep {

/// Entries above -kEntryTolerance count as non-negative. Values in
/// [-kEntryTolerance, 0) are rounding dust and get clamped on export.
inline constexpr double kEntryTolerance = 1e-12;

/// P(Lambda) = Q Lambda Q^T for the walk eigenbasis Q, evaluated entry-wise:
///
///   p_kl = (1/n) * (1 + 2 * sum_{j=1}^{n-1} lambda_j S_j(k) S_j(l)),
///   S_j(k) = sin(2*pi*k*j/n + pi/4).
///
/// Always succeeds. Rows and columns sum to 1 for every input; whether the
/// entries are non-negative is a separate question answered by feasibility().
/// Rows are filled independently, so the result does not depend on
/// `threads`.
DenseMatrix construct(const Spectrum& s, unsigned threads = 1);

/// The same matrix via two explicit dense products Q * diag(lambda) * Q^T.
/// Slower; kept as an independent cross-check of construct().
DenseMatrix construct_by_product(const Spectrum& s);

struct FeasibilityCertificate {
  bool feasible = true;
  std::optional<std::size_t> witness_k;
  std::optional<std::size_t> witness_l;
  std::optional<double> witness_value;
  double min_entry = 0.0;
};

/// Evaluates sum_{j>=1} lambda_j S_j(k) S_j(l) >= -1/2 over all k <= l.
///
/// min_entry is the smallest p_kl implied by those sums. On failure the
/// witness is the position of that minimum, ties broken in row-major order
/// over the upper triangle.
FeasibilityCertificate feasibility(const Spectrum& s);

enum class CorollaryVerdict { SuleimanovaPass, NonnegativePass, NotCovered };

std::string_view to_string(CorollaryVerdict v);

/// Sufficient sign/sum bounds that guarantee feasibility: a non-positive tail
/// summing to at least -1/2, or a non-negative tail summing to at most 1/2.
CorollaryVerdict corollary_bound(const Spectrum& s);

/// H(v) Lambda H(v) with the Householder reflection H(v) = I - 2 v v^T/|v|^2,
/// v = (1 - sqrt(n), 1, ..., 1)^T. H(v) is symmetric orthogonal with a
/// constant first column, so the result has row sums 1, but its diagonal goes
/// negative for large n. Requires n >= 2.
DenseMatrix householder_construct(const Spectrum& s);

/// The reflection itself, exposed for tests.
DenseMatrix householder_reflection(std::size_t n);

/// Closed form of diagonal entry (k, k) of householder_construct():
///   1/n + alpha^2 * sum_{j>=1, j!=k} lambda_j + (1 - alpha)^2 lambda_k,
/// with alpha = 1/(sqrt(n)(sqrt(n) - 1)). Valid for k >= 1.
double householder_diagonal(const Spectrum& s, std::size_t k);

} // namespace sdiep
