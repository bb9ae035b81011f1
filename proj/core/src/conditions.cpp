#include "sdiep/conditions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sdiep {

namespace {

// Normalised view with the one-based subscripts the conditions are written
// in: at(1) = 1 and at(2) >= at(3) >= ... >= at(n).
class NormalizedList {
public:
  explicit NormalizedList(const Spectrum& s) : tail_(s.tail().begin(), s.tail().end()) {
    std::sort(tail_.begin(), tail_.end(), std::greater<>());
  }

  [[nodiscard]] long n() const noexcept { return static_cast<long>(tail_.size()) + 1; }

  [[nodiscard]] double at(long i) const {
    if (i < 1 || i > n()) throw std::out_of_range("eigenvalue subscript out of range");
    return i == 1 ? 1.0 : tail_[static_cast<std::size_t>(i - 2)];
  }

private:
  std::vector<double> tail_;
};

ConditionVerdict inapplicable(std::string name) {
  return {std::move(name), false, std::nullopt, std::nullopt};
}

ConditionVerdict verdict(std::string name, double lhs) {
  return {std::move(name), true, lhs, lhs >= 0.0};
}

// The tail shared by the Nader-type conditions:
//   (q - F)/(q F) * lambda_c + sum_{k=1}^{F-1} lambda_{n - c k + c} / (k (k+1)),
// with c the stride (4 or 8), q the half/quarter size and F the bracket term.
double staircase(const NormalizedList& l, long stride, double q, long bracket) {
  const long n = l.n();
  const double f = static_cast<double>(bracket);
  double s = (q - f) / (q * f) * l.at(stride);
  for (long k = 1; k <= bracket - 1; ++k) {
    s += l.at(n - stride * k + stride) / static_cast<double>(k * (k + 1));
  }
  return s;
}

} // namespace

ConditionVerdict perfect_mirsky(const Spectrum& s) {
  const NormalizedList l(s);
  const long n = l.n();
  if (n < 2) return inapplicable("perfect_mirsky");
  double lhs = 1.0 / static_cast<double>(n);
  for (long j = 2; j <= n; ++j) {
    lhs += l.at(j) / static_cast<double>((n - j + 2) * (n - j + 1));
  }
  return verdict("perfect_mirsky", lhs);
}

ConditionVerdict soules(const Spectrum& s) {
  const NormalizedList l(s);
  const long n = l.n();
  if (n < 3) return inapplicable("soules");
  const long m = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
  const auto nd = static_cast<double>(n);
  double lhs = 1.0 / nd + static_cast<double>(n - m - 1) / (nd * static_cast<double>(m + 1)) * l.at(2);
  // The printed upper limit overruns the list; stop once the subscript
  // would drop below 3.
  for (long k = 1; n - 2 * k + 2 >= 3; ++k) {
    lhs += l.at(n - 2 * k + 2) / static_cast<double>((k + 1) * k);
  }
  return verdict("soules", lhs);
}

ConditionVerdict nader_improved_soules_even(const Spectrum& s) {
  const NormalizedList l(s);
  const long n = l.n();
  if (n < 4 || n % 2 != 0) return inapplicable("nader_improved_soules_even");
  const auto nd = static_cast<double>(n);
  const long bracket = (n + 2) / 4;
  const double lhs = 1.0 / nd + l.at(2) / nd + staircase(l, 4, nd / 2.0, bracket);
  return verdict("nader_improved_soules_even", lhs);
}

ConditionVerdict nader_new1_odd(const Spectrum& s) {
  const NormalizedList l(s);
  const long n = l.n();
  if (n < 5 || n % 2 != 1) return inapplicable("nader_new1_odd");
  const auto nd = static_cast<double>(n);
  const long bracket = (n + 3) / 4;
  const double lhs = 1.0 / nd + (nd - 1.0) / (nd * (nd + 1.0)) * l.at(2) +
                     staircase(l, 4, (nd + 1.0) / 2.0, bracket);
  return verdict("nader_new1_odd", lhs);
}

ConditionVerdict nader_new2(const Spectrum& s) {
  const NormalizedList l(s);
  const long n = l.n();
  const long m = n / 4;
  if (m <= 1) return inapplicable("nader_new2");
  const auto nd = static_cast<double>(n);
  double c2 = 0.0;
  double c4 = 0.0;
  double q = 0.0;
  long bracket = 0;
  switch (n % 4) {
  case 0:
    c2 = 1.0 / nd;
    c4 = 2.0 / nd;
    q = nd / 4.0;
    bracket = (n + 4) / 8;
    break;
  case 2:
    c2 = 1.0 / nd;
    c4 = 2.0 * (nd - 2.0) / (nd * (nd + 2.0));
    q = (nd + 2.0) / 4.0;
    bracket = (n + 6) / 8;
    break;
  case 3:
    c2 = (nd - 1.0) / (nd * (nd + 1.0));
    c4 = 2.0 / (nd + 1.0);
    q = (nd + 1.0) / 4.0;
    bracket = (n + 5) / 8;
    break;
  default: // 1
    c2 = (nd - 1.0) / (nd * (nd + 1.0));
    c4 = 2.0 * (nd - 1.0) / ((nd + 1.0) * (nd + 3.0));
    q = (nd + 3.0) / 4.0;
    bracket = (n + 7) / 8;
    break;
  }
  const double lhs = 1.0 / nd + c2 * l.at(2) + c4 * l.at(4) + staircase(l, 8, q, bracket);
  return verdict("nader_new2", lhs);
}

ConditionVerdict nader_new3_n26(const Spectrum& s) {
  const NormalizedList l(s);
  if (l.n() != 26) return inapplicable("nader_new3_n26");
  const double lhs = 1.0 / 26.0 + l.at(2) / 26.0 + 6.0 / (13.0 * 7.0) * l.at(4) + 3.0 / 28.0 * l.at(8) +
                     l.at(16) / 4.0 + l.at(26) / 2.0;
  return verdict("nader_new3_n26", lhs);
}

bool ConditionReport::all_applicable_classical_fail() const {
  bool any = false;
  for (const auto& v : classical) {
    if (!v.applicable) continue;
    any = true;
    if (*v.satisfied) return false;
  }
  return any;
}

ConditionReport full_report(const Spectrum& s) {
  ConditionReport r;
  r.classical = {perfect_mirsky(s),  soules(s),     nader_improved_soules_even(s),
                 nader_new1_odd(s),  nader_new2(s), nader_new3_n26(s)};
  r.corollary = corollary_bound(s);
  r.feasibility = feasibility(s);
  return r;
}

} // namespace sdiep
