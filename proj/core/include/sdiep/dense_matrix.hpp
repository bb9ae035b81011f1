#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sdiep {

/// Square real matrix in row-major storage.
///
/// Used for every n x n object in the library: the walk matrix, the
/// orthonormal basis and the constructed P(Lambda). Symmetry is a property
/// checked by callers, not enforced by the type, because matrices read back
/// from files may legitimately fail it.
class DenseMatrix {
public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0);
  DenseMatrix(std::size_t n, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  double& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * n_ + col];
  }
  double operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * n_ + col];
  }

  [[nodiscard]] std::span<double> row(std::size_t r) noexcept {
    return {data_.data() + r * n_, n_};
  }
  [[nodiscard]] std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * n_, n_};
  }

  [[nodiscard]] std::span<const double> entries() const noexcept { return data_; }
  [[nodiscard]] std::span<double> entries() noexcept { return data_; }

  [[nodiscard]] DenseMatrix transposed() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

/// max_{i,j} |a(i,j) - b(i,j)|. Sizes must agree.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// max_{i,j} |m(i,j) - m(j,i)|.
double max_asymmetry(const DenseMatrix& m);

double trace(const DenseMatrix& m);

double frobenius_norm(const DenseMatrix& m);

} // namespace sdiep
