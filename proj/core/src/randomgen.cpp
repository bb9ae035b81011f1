#include "sdiep/randomgen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sdiep/constructor.hpp"
#include "sdiep/rng.hpp"

namespace sdiep {

namespace {
constexpr int kMaxRedraws = 64;
}

std::string_view to_string(Distribution d) {
  return d == Distribution::Power ? "power" : "uniform";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::Uniform01;
  if (name == "power") return Distribution::Power;
  throw std::invalid_argument("unknown distribution '" + std::string(name) + "'");
}

void GenConfig::validate() const {
  if (n < 2) throw std::invalid_argument("random generation needs n >= 2");
  if (!(alpha >= -0.5 && alpha <= 0.5)) throw std::invalid_argument("alpha must lie in [-1/2, 1/2]");
  if (!(power > 0.0)) throw std::invalid_argument("power must be positive");
}

Spectrum random_spectrum(const GenConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  std::vector<double> x(cfg.n - 1);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    double total = 0.0;
    for (double& xi : x) {
      const double u = rng.uniform01();
      xi = cfg.distribution == Distribution::Power ? std::pow(u, cfg.power) : u;
      total += xi;
    }
    if (total <= 0.0) continue;
    std::vector<double> values(cfg.n);
    values[0] = 1.0;
    for (std::size_t i = 1; i < cfg.n; ++i) values[i] = cfg.alpha * (x[i - 1] / total);
    return Spectrum(std::move(values));
  }
  throw std::runtime_error("every draw summed to zero; giving up");
}

DenseMatrix random_matrix(const GenConfig& cfg) { return construct(random_spectrum(cfg)); }

std::vector<DenseMatrix> random_matrices(const GenConfig& cfg, std::size_t count) {
  std::vector<DenseMatrix> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GenConfig c = cfg;
    c.seed = derive_seed(cfg.seed, i);
    out.push_back(random_matrix(c));
  }
  return out;
}

} // namespace sdiep
