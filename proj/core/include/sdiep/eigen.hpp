#pragma once

#include <vector>

#include "sdiep/dense_matrix.hpp"
#include "sdiep/spectrum.hpp"

namespace sdiep {

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm drops below
  /// relative_tolerance * ||m||_F.
  double relative_tolerance = 1e-12;
  int max_sweeps = 30;
};

/// Eigenvalues of a symmetric matrix, in non-increasing order, by the cyclic
/// Jacobi rotation method.
///
/// Throws std::invalid_argument if m deviates from symmetry by more than
/// 1e-10, and ConvergenceError if the sweep budget runs out.
std::vector<double> sym_eigenvalues(const DenseMatrix& m, const JacobiOptions& opts = {});

/// Convenience overload taking the relative tolerance only.
std::vector<double> sym_eigenvalues(const DenseMatrix& m, double tol);

struct StochasticityReport {
  bool symmetric_ok = false;
  bool nonneg_ok = false;
  bool rowsum_ok = false;
  bool colsum_ok = false;
  double max_rowsum_dev = 0.0;
  double max_colsum_dev = 0.0;
  double max_asymmetry = 0.0;
  double min_entry = 0.0;

  [[nodiscard]] bool pass() const noexcept {
    return symmetric_ok && nonneg_ok && rowsum_ok && colsum_ok;
  }
};

/// Entries count as non-negative when >= -entry_tol. Row sums, column sums
/// and the symmetry defect are compared against sum_tol.
StochasticityReport is_doubly_stochastic(const DenseMatrix& m, double entry_tol,
                                         double sum_tol = 1e-10);

struct RoundtripResult {
  bool ok = false;
  double max_error = 0.0;
  std::vector<double> expected; // sorted spectrum, non-increasing
  std::vector<double> computed; // sorted eigenvalues of construct(s)
};

/// Builds construct(s), diagonalises it and compares the two sorted lists
/// pairwise. Degenerate eigenvalues pair up by value.
RoundtripResult spectrum_roundtrip(const Spectrum& s, double tol);

} // namespace sdiep
