#include "sdiep/spectrum.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include "sdiep/error.hpp"

namespace sdiep {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

double parse_decimal(std::string_view token, std::size_t position) {
  token = trim(token);
  // from_chars rejects a leading '+'; accept it for convenience.
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ParseError("spectrum token " + std::to_string(position + 1) + " is not a decimal: '" +
                     std::string(token) + "'");
  }
  return value;
}

} // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("spectrum must contain at least one value");
  if (values_[0] != 1.0) throw std::invalid_argument("leading (Perron) eigenvalue must be exactly 1");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= -1.0 && v <= 1.0)) {
      throw std::invalid_argument("eigenvalue " + std::to_string(i) + " lies outside [-1, 1]");
    }
  }
}

Spectrum parse_spectrum(std::string_view text) {
  if (trim(text).empty()) throw ParseError("empty spectrum");
  std::vector<double> values;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                           : comma - start);
    values.push_back(parse_decimal(token, values.size()));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Spectrum(std::move(values));
}

std::vector<Spectrum> parse_spectrum_lines(std::string_view text) {
  std::vector<Spectrum> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto line = trim(text.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                                            : nl - start));
    if (!line.empty() && line.front() != '#') out.push_back(parse_spectrum(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

std::string format_spectrum(const Spectrum& s) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    // Shortest representation that parses back to the same double.
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, s[i]);
    out.append(buf, ec == std::errc{} ? end : buf);
  }
  return out;
}

SpectrumClass classify(const Spectrum& s) {
  SpectrumClass c;
  c.is_suleimanova = true;
  c.is_nonnegative_case = true;
  c.is_normalized = true;
  double sum = 0.0;
  const auto tail = s.tail();
  for (std::size_t i = 0; i < tail.size(); ++i) {
    sum += tail[i];
    if (tail[i] > 0.0) c.is_suleimanova = false;
    if (tail[i] < 0.0) c.is_nonnegative_case = false;
    if (i > 0 && tail[i] > tail[i - 1]) c.is_normalized = false;
  }
  c.delta = 1.0 + sum;
  return c;
}

TraceMomentResult trace_moment_check(const Spectrum& s, int max_k) {
  if (max_k < 1) throw std::invalid_argument("max_k must be positive");
  for (int k = 1; k <= max_k; ++k) {
    double moment = 1.0;
    for (const double v : s.tail()) moment += std::pow(v, k);
    if (moment < 0.0) return {false, k};
  }
  return {true, std::nullopt};
}

} // namespace sdiep
