#include "sdiep/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdiep {

DenseMatrix::DenseMatrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), data_(std::move(entries)) {
  if (data_.size() != n_ * n_) throw std::invalid_argument("entry count does not match n*n");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.size();
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < n; ++j) out[j] += aik * brow[j];
    }
  }
  return c;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  double worst = 0.0;
  const auto x = a.entries();
  const auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

double max_asymmetry(const DenseMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
  return worst;
}

double trace(const DenseMatrix& m) {
  double t = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

double frobenius_norm(const DenseMatrix& m) {
  double s = 0.0;
  for (const double v : m.entries()) s += v * v;
  return std::sqrt(s);
}

} // namespace sdiep
