#include "sdiep/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "sdiep/constructor.hpp"
#include "sdiep/error.hpp"

namespace sdiep {

namespace {

constexpr double kSymmetryLimit = 1e-10;

// Row-major working copy whose row stride is padded to an odd length, so
// that column walks at power-of-two n do not keep hitting the same cache sets.
class Workspace {
 public:
  explicit Workspace(const DenseMatrix& m) : n_(m.size()), ld_(m.size() | 1), data_(ld_ * n_) {
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = 0; q < n_; ++q) at(p, q) = 0.5 * (m(p, q) + m(q, p));
  }

  std::size_t size() const { return n_; }
  double& at(std::size_t r, std::size_t c) { return data_[r * ld_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * ld_ + c]; }

  double off_diagonal_norm() const {
    double s = 0.0;
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = p + 1; q < n_; ++q) s += at(p, q) * at(p, q);
    return std::sqrt(2.0 * s);
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = 0; q < n_; ++q) s += at(p, q) * at(p, q);
    return std::sqrt(s);
  }

  // Zeroes (p, q) with one plane rotation applied from both sides.
  void rotate(std::size_t p, std::size_t q) {
    const double apq = at(p, q);
    const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double app = at(p, p);
    const double aqq = at(q, q);
    double* rp = &data_[p * ld_];
    double* rq = &data_[q * ld_];
    for (std::size_t k = 0; k < n_; ++k) {
      const double akp = rp[k];
      const double akq = rq[k];
      rp[k] = c * akp - s * akq;
      rq[k] = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n_; ++k) {
      at(k, p) = rp[k];
      at(k, q) = rq[k];
    }
    at(p, p) = app - t * apq;
    at(q, q) = aqq + t * apq;
    at(p, q) = at(q, p) = 0.0;
  }

 private:
  std::size_t n_;
  std::size_t ld_;
  std::vector<double> data_;
};

} // namespace

std::vector<double> sym_eigenvalues(const DenseMatrix& m, const JacobiOptions& opts) {
  if (!(opts.relative_tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_asymmetry(m) > kSymmetryLimit) throw std::invalid_argument("matrix is not symmetric");

  // Work on the exactly symmetrised copy so both triangles stay in step.
  Workspace a(m);
  const std::size_t n = a.size();
  const double threshold = opts.relative_tolerance * a.frobenius_norm();
  bool converged = a.off_diagonal_norm() <= threshold;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a.at(p, q) != 0.0) a.rotate(p, q);
    converged = a.off_diagonal_norm() <= threshold;
  }
  if (!converged) {
    throw ConvergenceError("Jacobi eigensolver did not converge within " +
                           std::to_string(opts.max_sweeps) + " sweeps");
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a.at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> sym_eigenvalues(const DenseMatrix& m, double tol) {
  JacobiOptions opts;
  opts.relative_tolerance = tol;
  return sym_eigenvalues(m, opts);
}

StochasticityReport is_doubly_stochastic(const DenseMatrix& m, double entry_tol, double sum_tol) {
  if (!(entry_tol > 0.0) || !(sum_tol > 0.0)) throw std::invalid_argument("tolerances must be positive");
  const std::size_t n = m.size();
  StochasticityReport r;
  r.min_entry = n == 0 ? 0.0 : m(0, 0);
  std::vector<double> col_sums(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      row_sum += v;
      col_sums[j] += v;
      r.min_entry = std::min(r.min_entry, v);
    }
    r.max_rowsum_dev = std::max(r.max_rowsum_dev, std::abs(row_sum - 1.0));
  }
  for (const double c : col_sums) r.max_colsum_dev = std::max(r.max_colsum_dev, std::abs(c - 1.0));
  r.max_asymmetry = max_asymmetry(m);

  r.symmetric_ok = r.max_asymmetry <= sum_tol;
  r.nonneg_ok = r.min_entry >= -entry_tol;
  r.rowsum_ok = r.max_rowsum_dev <= sum_tol;
  r.colsum_ok = r.max_colsum_dev <= sum_tol;
  return r;
}

RoundtripResult spectrum_roundtrip(const Spectrum& s, double tol) {
  RoundtripResult r;
  r.expected.assign(s.values().begin(), s.values().end());
  std::sort(r.expected.begin(), r.expected.end(), std::greater<>());
  r.computed = sym_eigenvalues(construct(s));
  for (std::size_t i = 0; i < r.expected.size(); ++i) {
    r.max_error = std::max(r.max_error, std::abs(r.expected[i] - r.computed[i]));
  }
  r.ok = r.max_error <= tol;
  return r;
}

} // namespace sdiep
