#include "sdiep/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sdiep/rw_basis.hpp"

namespace sdiep {

namespace {

// Fills rows k = first, first + stride, ... of the upper triangle and mirrors
// each entry. Every (k, l) pair has exactly one writer.
void fill_rows(const Spectrum& s, const DenseMatrix& sines, DenseMatrix& out, std::size_t first,
               std::size_t stride) {
  const std::size_t n = s.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> weighted(n);
  for (std::size_t k = first; k < n; k += stride) {
    for (std::size_t j = 1; j < n; ++j) weighted[j] = s[j] * sines(j, k);
    for (std::size_t l = k; l < n; ++l) {
      double acc = 0.0;
      for (std::size_t j = 1; j < n; ++j) acc += weighted[j] * sines(j, l);
      const double p = (1.0 + 2.0 * acc) * inv_n;
      out(k, l) = p;
      out(l, k) = p;
    }
  }
}

} // namespace

DenseMatrix construct(const Spectrum& s, unsigned threads) {
  const std::size_t n = s.size();
  const DenseMatrix sines = phase_sine_table(n);
  DenseMatrix p(n);
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    fill_rows(s, sines, p, 0, 1);
    return p;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] { fill_rows(s, sines, p, w, workers); });
  }
  pool.clear();
  return p;
}

DenseMatrix construct_by_product(const Spectrum& s) {
  const std::size_t n = s.size();
  const OrthonormalBasis basis = build_basis(n);
  DenseMatrix q_lambda = basis.q;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q_lambda(i, j) *= s[j];
  return q_lambda * basis.q.transposed();
}

FeasibilityCertificate feasibility(const Spectrum& s) {
  const std::size_t n = s.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  FeasibilityCertificate cert;
  cert.min_entry = inv_n; // the empty-tail value; n == 1 has nothing else
  std::size_t best_k = 0;
  std::size_t best_l = 0;
  bool have = false;
  // by_point[k][j] = S_j(k), evaluated directly rather than through the
  // residue table construct() uses.
  std::vector<std::vector<double>> by_point(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 1; j < n; ++j) by_point[k][j] = phase_sine(n, j, k);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& sk = by_point[k];
    for (std::size_t l = k; l < n; ++l) {
      const auto& sl = by_point[l];
      // The inequality reads sum >= -1/2; p_kl = (1 + 2 sum)/n.
      double sum = 0.0;
      for (std::size_t j = 1; j < n; ++j) sum += s[j] * sk[j] * sl[j];
      const double entry = (1.0 + 2.0 * sum) * inv_n;
      if (!have || entry < cert.min_entry) {
        cert.min_entry = entry;
        best_k = k;
        best_l = l;
        have = true;
      }
    }
  }
  cert.feasible = cert.min_entry >= -kEntryTolerance;
  if (!cert.feasible) {
    cert.witness_k = best_k;
    cert.witness_l = best_l;
    cert.witness_value = cert.min_entry;
  }
  return cert;
}

std::string_view to_string(CorollaryVerdict v) {
  switch (v) {
  case CorollaryVerdict::SuleimanovaPass: return "SuleimanovaPass";
  case CorollaryVerdict::NonnegativePass: return "NonnegativePass";
  case CorollaryVerdict::NotCovered: return "NotCovered";
  }
  return "NotCovered";
}

CorollaryVerdict corollary_bound(const Spectrum& s) {
  const auto tail = s.tail();
  // Rounding can push a tail that sums to exactly -1/2 a few ulps past the
  // bound. Entries built from such a tail stay far inside kEntryTolerance.
  const double slack = 4.0 * static_cast<double>(s.size()) * std::numeric_limits<double>::epsilon();
  double sum = 0.0;
  bool nonpositive = true;
  bool nonnegative = true;
  for (const double v : tail) {
    sum += v;
    nonpositive = nonpositive && v <= 0.0;
    nonnegative = nonnegative && v >= 0.0;
  }
  if (nonpositive && sum >= -0.5 - slack) return CorollaryVerdict::SuleimanovaPass;
  if (nonnegative && sum <= 0.5 + slack) return CorollaryVerdict::NonnegativePass;
  return CorollaryVerdict::NotCovered;
}

DenseMatrix householder_reflection(std::size_t n) {
  if (n < 2) throw std::invalid_argument("Householder construction needs n >= 2");
  std::vector<double> v(n, 1.0);
  v[0] = 1.0 - std::sqrt(static_cast<double>(n));
  double norm2 = 0.0;
  for (const double x : v) norm2 += x * x;
  DenseMatrix h = DenseMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) -= 2.0 * v[i] * v[j] / norm2;
  return h;
}

DenseMatrix householder_construct(const Spectrum& s) {
  const std::size_t n = s.size();
  const DenseMatrix h = householder_reflection(n);
  DenseMatrix h_lambda = h;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h_lambda(i, j) *= s[j];
  return h_lambda * h;
}

double householder_diagonal(const Spectrum& s, std::size_t k) {
  const std::size_t n = s.size();
  if (n < 2) throw std::invalid_argument("Householder construction needs n >= 2");
  if (k == 0 || k >= n) throw std::invalid_argument("closed-form diagonal needs 1 <= k < n");
  const double root = std::sqrt(static_cast<double>(n));
  const double alpha = 1.0 / (root * (root - 1.0));
  double others = 0.0;
  for (std::size_t j = 1; j < n; ++j)
    if (j != k) others += s[j];
  return 1.0 / static_cast<double>(n) + alpha * alpha * others + (1.0 - alpha) * (1.0 - alpha) * s[k];
}

} // namespace sdiep
