#include "sdiep/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "sdiep/conditions.hpp"
#include "sdiep/constructor.hpp"
#include "sdiep/rng.hpp"
#include "sdiep/rw_basis.hpp"

namespace sdiep {

namespace {

// Magnitudes mu_i = -lambda_i of a Suleimanova tail.
using Magnitudes = std::vector<double>;

Spectrum from_magnitudes(const Magnitudes& mu) {
  std::vector<double> values(mu.size() + 1);
  values[0] = 1.0;
  for (std::size_t i = 0; i < mu.size(); ++i) values[i + 1] = 0.0 - mu[i]; // +0, not -0, for mu = 0
  return Spectrum(std::move(values));
}

bool infeasible(const Magnitudes& mu) { return !feasibility(from_magnitudes(mu)).feasible; }

double delta_of(const Magnitudes& mu) { return classify(from_magnitudes(mu)).delta; }

// Splits `mass` over mu uniformly on the simplex, or puts at least 90% of it
// on one random coordinate and spreads the rest.
Magnitudes sample_magnitudes(Rng& rng, std::size_t count, double mass) {
  Magnitudes mu(count, 0.0);
  const bool concentrated = rng.uniform01() < 0.5;
  std::size_t heavy = count;
  double spread = mass;
  if (concentrated) {
    heavy = static_cast<std::size_t>(rng.below(count));
    const double share = rng.uniform(0.9, 1.0);
    mu[heavy] = mass * share;
    spread = mass - mu[heavy];
  }
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i == heavy) continue;
    mu[i] = rng.exponential();
    total += mu[i];
  }
  if (total > 0.0) {
    for (std::size_t i = 0; i < count; ++i)
      if (i != heavy) mu[i] *= spread / total;
  } else if (heavy < count) {
    mu[heavy] = mass;
  }
  return mu;
}

struct Candidate {
  double delta = -1.0;
  std::size_t order = 0;
  Magnitudes mu;
  bool found = false;

  // Larger delta wins; equal deltas go to the earlier order.
  [[nodiscard]] bool beats(const Candidate& other) const {
    if (!found) return false;
    if (!other.found) return true;
    if (delta != other.delta) return delta > other.delta;
    return order < other.order;
  }
};

Candidate run_trials(std::size_t n, std::uint64_t seed, std::size_t first, std::size_t last,
                     std::size_t order_offset) {
  Candidate best;
  for (std::size_t t = first; t < last; ++t) {
    Rng rng(derive_seed(seed, t));
    const double target_delta = rng.uniform(0.0, 0.5);
    Magnitudes mu = sample_magnitudes(rng, n - 1, 1.0 - target_delta);
    if (!infeasible(mu)) continue;
    Candidate c{delta_of(mu), order_offset + t, std::move(mu), true};
    if (c.beats(best)) best = std::move(c);
  }
  return best;
}

// Greedy coordinate descent on the total magnitude: each coordinate is
// lowered by `step` for as long as the spectrum stays infeasible, then the
// step halves for the next round.
Magnitudes refine(Magnitudes mu, double step, int rounds, double& final_step) {
  for (int round = 0; round < rounds; ++round) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (;;) {
        const double dec = std::min(step, mu[i]);
        if (dec <= 0.0) break;
        Magnitudes trial = mu;
        trial[i] -= dec;
        if (!infeasible(trial)) break;
        mu = std::move(trial);
      }
    }
    final_step = step;
    step *= 0.5;
  }
  return mu;
}

} // namespace

double s_value(std::size_t n, std::size_t j, std::size_t k) {
  if (j >= n || k >= n) throw std::invalid_argument("S_j(k) index out of range");
  return phase_sine(n, j, k);
}

double max_s_product(std::size_t n) {
  if (n < 3) throw std::invalid_argument("max_s_product needs n >= 3");
  double best = -1.0;
  for (std::size_t j = 1; j < n; ++j) {
    // max_{k,l} S(k) S(l) is the larger of max(S)^2 and min(S)^2.
    double hi = -1.0;
    double lo = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double v = phase_sine(n, j, k);
      hi = std::max(hi, v);
      lo = std::min(lo, v);
    }
    best = std::max({best, hi * hi, lo * lo, hi * lo});
  }
  return best;
}

DeltaBracket bracket_delta_min(std::size_t n, std::size_t trials, std::uint64_t seed,
                               const SearchOptions& opts) {
  if (n < 3) throw std::invalid_argument("delta_min search needs n >= 3");
  if (trials < 1) throw std::invalid_argument("delta_min search needs at least one trial");

  DeltaBracket bracket;
  bracket.n = n;
  bracket.trials = trials;
  bracket.seed = seed;

  Candidate best;
  for (std::size_t p = 0; p < opts.probes.size(); ++p) {
    const Spectrum& probe = opts.probes[p];
    if (probe.size() != n) throw std::invalid_argument("probe length differs from n");
    if (!classify(probe).is_suleimanova) throw std::invalid_argument("probe is not a Suleimanova spectrum");
    Magnitudes mu(n - 1);
    for (std::size_t i = 1; i < n; ++i) mu[i - 1] = -probe[i];
    if (!infeasible(mu)) continue;
    Candidate c{delta_of(mu), p, std::move(mu), true};
    if (c.beats(best)) best = std::move(c);
  }

  const std::size_t offset = opts.probes.size();
  const std::size_t workers = std::clamp<std::size_t>(opts.threads, 1, trials);
  if (workers == 1) {
    Candidate c = run_trials(n, seed, 0, trials, offset);
    if (c.beats(best)) best = std::move(c);
  } else {
    std::vector<Candidate> partial(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t first = trials * w / workers;
        const std::size_t last = trials * (w + 1) / workers;
        pool.emplace_back([&, w, first, last] { partial[w] = run_trials(n, seed, first, last, offset); });
      }
    }
    for (auto& c : partial)
      if (c.beats(best)) best = std::move(c);
  }

  if (!best.found) return bracket;

  double step = opts.refine_step;
  Magnitudes mu = refine(best.mu, opts.refine_step, opts.refine_rounds, step);

  // Re-verify before reporting.
  Spectrum witness = from_magnitudes(mu);
  if (feasibility(witness).feasible) return bracket;
  bracket.lower = classify(witness).delta;
  bracket.witness = std::move(witness);

  // One more step down any coordinate lands on feasible ground; the smallest
  // such delta annotates how tight the refinement is.
  std::optional<double> neighbour;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] <= 0.0) continue;
    Magnitudes trial = mu;
    trial[i] -= std::min(step, mu[i]);
    if (infeasible(trial)) continue;
    const double d = delta_of(trial);
    if (!neighbour || d < *neighbour) neighbour = d;
  }
  if (neighbour) bracket.heuristic_upper = std::min(*neighbour, bracket.upper);
  return bracket;
}

std::vector<Spectrum> separating_examples(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 5) throw std::invalid_argument("separating examples need n >= 5");
  std::vector<Spectrum> found;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    Magnitudes mu = sample_magnitudes(rng, n - 1, 0.5);
    // Shave rounding so that 1 + sum(lambda) >= 1/2 holds as computed.
    while (delta_of(mu) < 0.5) {
      for (double& m : mu) m *= 1.0 - 0x1.0p-50;
    }
    Spectrum s = from_magnitudes(mu);
    const ConditionReport report = full_report(s);
    if (report.feasibility.feasible && report.all_applicable_classical_fail()) {
      found.push_back(std::move(s));
    }
  }
  return found;
}

} // namespace sdiep
