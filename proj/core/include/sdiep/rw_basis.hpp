#pragma once

#include <cstddef>
#include <vector>

#include "sdiep/dense_matrix.hpp"

namespace sdiep {

/// Transition matrix of the simple symmetric random walk on the n-cycle.
/// Row 0 is (0, 1/2, 0, ..., 0, 1/2); row r is row 0 shifted right by r.
struct WalkMatrix {
  DenseMatrix entries;

  [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
};

/// Orthonormal eigenbasis of the walk matrix.
///
/// q(j, k) = sqrt(2/n) * sin(2*pi*k*j/n + pi/4) is the j-th coordinate of
/// the k-th eigenvector w_k, whose eigenvalue is eigvals[k] = cos(2*pi*k/n).
/// Since the formula is symmetric in (j, k), q is a symmetric orthogonal
/// matrix and column 0 is the constant vector 1/sqrt(n).
struct OrthonormalBasis {
  DenseMatrix q;
  std::vector<double> eigvals;

  [[nodiscard]] std::size_t size() const noexcept { return q.size(); }
};

/// n >= 3. For n = 2 both neighbours coincide and the cycle degenerates,
/// so it is rejected with std::invalid_argument.
WalkMatrix walk_matrix(std::size_t n);

/// n >= 1.
OrthonormalBasis build_basis(std::size_t n);

/// sin(2*pi*((k*j) mod n)/n + pi/4). The product k*j is reduced modulo n in
/// integer arithmetic before conversion, which keeps the argument in
/// [pi/4, 2*pi + pi/4) for any n.
double phase_sine(std::size_t n, std::size_t j, std::size_t k);

/// All S_j(k) values as an n x n table, table(j, k) = phase_sine(n, j, k).
DenseMatrix phase_sine_table(std::size_t n);

/// True iff ||P w_k - eigvals[k] w_k||_inf <= tol for every k.
/// Throws std::invalid_argument on size mismatch or tol <= 0.
bool verify_eigenpairs(const OrthonormalBasis& basis, const WalkMatrix& walk, double tol);

/// max_k ||P w_k - eigvals[k] w_k||_inf.
double max_eigenpair_residual(const OrthonormalBasis& basis, const WalkMatrix& walk);

/// max_{i,j} |(Q^T Q - I)(i,j)|.
double orthonormality_defect(const OrthonormalBasis& basis);

} // namespace sdiep
