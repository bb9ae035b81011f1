#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sdiep/eigen.hpp"
#include "sdiep/rw_basis.hpp"

using namespace sdiep;

TEST(WalkMatrix, ThreeCycleIsComplete) {
  const WalkMatrix p = walk_matrix(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(p.entries(i, j), i == j ? 0.0 : 0.5);
}

TEST(WalkMatrix, FirstRowOfFourCycle) {
  const WalkMatrix p = walk_matrix(4);
  const auto row = p.entries.row(0);
  EXPECT_EQ(std::vector<double>(row.begin(), row.end()), (std::vector<double>{0.0, 0.5, 0.0, 0.5}));
}

TEST(WalkMatrix, IsSymmetricCirculant) {
  for (std::size_t n : {3u, 7u, 10u}) {
    const WalkMatrix p = walk_matrix(n);
    EXPECT_EQ(max_asymmetry(p.entries), 0.0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) EXPECT_EQ(p.entries(r, c), p.entries(0, (c + n - r) % n));
  }
}

TEST(WalkMatrix, EigenvaluesAreCosines) {
  const std::size_t n = 5;
  const auto eig = sym_eigenvalues(walk_matrix(n).entries);
  std::vector<double> expected(n);
  for (std::size_t k = 0; k < n; ++k) expected[k] = std::cos(2.0 * std::numbers::pi * k / n);
  std::sort(expected.begin(), expected.end(), std::greater<>());
  for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(eig[k], expected[k], 1e-10);
}

TEST(WalkMatrix, RejectsDegenerateCycles) {
  EXPECT_THROW(walk_matrix(2), std::invalid_argument);
  EXPECT_THROW(walk_matrix(1), std::invalid_argument);
  EXPECT_THROW(walk_matrix(0), std::invalid_argument);
}

TEST(Basis, SizeOne) {
  const OrthonormalBasis b = build_basis(1);
  EXPECT_NEAR(b.q(0, 0), 1.0, 1e-15);
  EXPECT_EQ(b.eigvals, std::vector<double>{1.0});
}

TEST(Basis, SizeTwoByHand) {
  // sin(pi k j + pi/4): (k, j) = (1, 1) gives sin(5 pi/4) = -sqrt(2)/2.
  const OrthonormalBasis b = build_basis(2);
  const double h = std::sqrt(2.0) / 2.0;
  EXPECT_NEAR(b.q(0, 0), h, 1e-15);
  EXPECT_NEAR(b.q(0, 1), h, 1e-15);
  EXPECT_NEAR(b.q(1, 0), h, 1e-15);
  EXPECT_NEAR(b.q(1, 1), -h, 1e-15);
  EXPECT_NEAR(b.eigvals[1], -1.0, 1e-15);
}

TEST(Basis, RejectsZero) { EXPECT_THROW(build_basis(0), std::invalid_argument); }

TEST(Basis, BruteForceGramOfSizeEight) {
  const DenseMatrix g = oracle::gram(build_basis(8).q);
  EXPECT_LT(max_abs_diff(g, DenseMatrix::identity(8)), 1e-12);
}

TEST(Basis, AgreesWithUnreducedFormula) {
  for (std::size_t n : {3u, 16u, 45u, 100u}) {
    EXPECT_LT(max_abs_diff(build_basis(n).q, oracle::naive_basis(n)), 1e-12) << "n = " << n;
  }
}

TEST(Basis, StructuralProperties) {
  for (std::size_t n = 1; n <= 40; ++n) {
    const OrthonormalBasis b = build_basis(n);
    EXPECT_EQ(max_asymmetry(b.q), 0.0);
    const double c = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(b.q(j, 0), c, 1e-15);
    for (std::size_t k = 1; k < n; ++k) EXPECT_NEAR(b.eigvals[k], b.eigvals[n - k], 1e-14);
  }
}

TEST(Basis, OrthonormalBothWaysAcrossSweep) {
  for (std::size_t n = 3; n <= 256; n += 11) {
    const OrthonormalBasis b = build_basis(n);
    EXPECT_LT(orthonormality_defect(b), 1e-11) << "n = " << n;
    const DenseMatrix qqt = b.q * b.q.transposed();
    const DenseMatrix qtq = b.q.transposed() * b.q;
    EXPECT_LT(max_abs_diff(qqt, DenseMatrix::identity(n)), 1e-11) << "n = " << n;
    EXPECT_LT(max_abs_diff(qtq, DenseMatrix::identity(n)), 1e-11) << "n = " << n;
  }
}

TEST(Basis, CombinesFourierRealAndImaginaryParts) {
  // w_k = (u_k + v_k)/sqrt(n), and u_k, v_k are themselves eigenvectors.
  for (std::size_t n : {5u, 8u, 13u}) {
    const OrthonormalBasis b = build_basis(n);
    const WalkMatrix p = walk_matrix(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto u = oracle::cosine_vector(n, k);
      const auto v = oracle::sine_vector(n, k);
      const auto pu = oracle::matvec(p.entries, u);
      const auto pv = oracle::matvec(p.entries, v);
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_NEAR(b.q(j, k), (u[j] + v[j]) / std::sqrt(static_cast<double>(n)), 1e-13);
        EXPECT_NEAR(pu[j], b.eigvals[k] * u[j], 1e-13);
        EXPECT_NEAR(pv[j], b.eigvals[k] * v[j], 1e-13);
      }
    }
  }
}

TEST(Eigenpairs, HoldForSixAndTwelve) {
  for (std::size_t n : {6u, 12u}) {
    EXPECT_TRUE(verify_eigenpairs(build_basis(n), walk_matrix(n), 1e-12)) << "n = " << n;
  }
}

TEST(Eigenpairs, WrongPairingIsDetected) {
  OrthonormalBasis b = build_basis(3);
  // eigvals are (1, -1/2, -1/2); moving the Perron value breaks the pairing.
  std::swap(b.eigvals[0], b.eigvals[1]);
  EXPECT_FALSE(verify_eigenpairs(b, walk_matrix(3), 1e-12));
}

TEST(Eigenpairs, DimensionMismatchAndBadTolerance) {
  EXPECT_THROW(verify_eigenpairs(build_basis(4), walk_matrix(5), 1e-12), std::invalid_argument);
  EXPECT_THROW(verify_eigenpairs(build_basis(4), walk_matrix(4), 0.0), std::invalid_argument);
}

TEST(Eigenpairs, HoldAcrossSweep) {
  for (std::size_t n = 3; n <= 128; n += 5) {
    EXPECT_LT(max_eigenpair_residual(build_basis(n), walk_matrix(n)), 1e-12) << "n = " << n;
  }
}
