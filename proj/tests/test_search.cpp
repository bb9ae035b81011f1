#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "golden_spectra.hpp"
#include "sdiep/conditions.hpp"
#include "sdiep/constructor.hpp"
#include "sdiep/search.hpp"

using namespace sdiep;

TEST(SValue, Examples) {
  EXPECT_NEAR(s_value(8, 1, 1), 1.0, 1e-15);
  EXPECT_NEAR(s_value(8, 0, 3), std::numbers::sqrt2 / 2.0, 1e-15);
  EXPECT_THROW(s_value(8, 8, 0), std::invalid_argument);
  EXPECT_THROW(s_value(8, 0, 8), std::invalid_argument);
}

TEST(SValue, MatchesDirectFormula) {
  for (std::size_t n : {3u, 7u, 12u, 33u})
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double direct = std::sin(2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                           static_cast<double>(n) +
                                       std::numbers::pi / 4.0);
        EXPECT_NEAR(s_value(n, j, k), direct, 1e-13);
      }
}

TEST(MaxSProduct, ReachesOneExactlyForMultiplesOfEight) {
  for (std::size_t n = 3; n <= 256; ++n) {
    const double m = max_s_product(n);
    EXPECT_LE(m, 1.0 + 1e-15);
    if (n % 8 == 0) {
      EXPECT_NEAR(m, 1.0, 1e-12) << n;
    } else {
      EXPECT_LT(m, 1.0 - 1e-12) << n;
    }
  }
  EXPECT_THROW(max_s_product(2), std::invalid_argument);
}

TEST(MaxSProduct, BruteForceAgreement) {
  for (std::size_t n : {3u, 5u, 10u, 17u}) {
    double best = -2.0;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) best = std::max(best, s_value(n, j, k) * s_value(n, j, l));
    EXPECT_DOUBLE_EQ(max_s_product(n), best);
  }
}

TEST(BracketDeltaMin, FiveReachesKnownLowerBound) {
  const DeltaBracket b = bracket_delta_min(5, 20000, 1);
  EXPECT_GE(b.lower, 0.48);
  EXPECT_EQ(b.upper, 0.5);
  ASSERT_TRUE(b.witness.has_value());
  // No delta-Suleimanova spectrum with delta above this threshold can be
  // infeasible, since every off-constant term is bounded by max_s_product.
  EXPECT_LE(b.lower, 1.0 - 1.0 / (2.0 * max_s_product(5)) + 1e-12);
}

TEST(BracketDeltaMin, WitnessInvariants) {
  for (std::size_t n : {3u, 4u, 6u, 7u}) {
    const DeltaBracket b = bracket_delta_min(n, 500, 9);
    EXPECT_EQ(b.n, n);
    EXPECT_EQ(b.trials, 500u);
    EXPECT_EQ(b.seed, 9u);
    if (!b.witness) continue;
    const SpectrumClass c = classify(*b.witness);
    EXPECT_TRUE(c.is_suleimanova);
    EXPECT_DOUBLE_EQ(c.delta, b.lower);
    EXPECT_FALSE(feasibility(*b.witness).feasible);
    EXPECT_LE(b.lower, b.upper);
    if (b.heuristic_upper) {
      EXPECT_GE(*b.heuristic_upper, b.lower);
      EXPECT_LE(*b.heuristic_upper, b.upper);
    }
  }
}

TEST(BracketDeltaMin, ProbeForThree) {
  SearchOptions opts;
  opts.probes.push_back(parse_spectrum("1,0,-1"));
  const DeltaBracket b = bracket_delta_min(3, 1, 0, opts);
  ASSERT_TRUE(b.witness.has_value());
  EXPECT_GE(b.lower, 0.0);
  EXPECT_LE(b.lower, 0.5);
}

TEST(BracketDeltaMin, ProbeIsUsedAsStart) {
  SearchOptions opts;
  opts.probes.push_back(parse_spectrum(golden::kDeltaMinWitness));
  opts.refine_rounds = 0;
  const DeltaBracket b = bracket_delta_min(5, 1, 0, opts);
  EXPECT_GE(b.lower, classify(parse_spectrum(golden::kDeltaMinWitness)).delta);
}

TEST(BracketDeltaMin, RejectsBadProbes) {
  SearchOptions opts;
  opts.probes.push_back(parse_spectrum("1,-0.1,-0.1"));
  EXPECT_THROW(bracket_delta_min(5, 1, 0, opts), std::invalid_argument);
  opts.probes = {parse_spectrum("1,0.1,-0.1,-0.1,-0.1")};
  EXPECT_THROW(bracket_delta_min(5, 1, 0, opts), std::invalid_argument);
  EXPECT_THROW(bracket_delta_min(2, 1, 0), std::invalid_argument);
  EXPECT_THROW(bracket_delta_min(5, 0, 0), std::invalid_argument);
}

TEST(BracketDeltaMin, DeterministicAndThreadIndependent) {
  const DeltaBracket a = bracket_delta_min(6, 3000, 17);
  const DeltaBracket b = bracket_delta_min(6, 3000, 17);
  SearchOptions par;
  par.threads = 4;
  const DeltaBracket c = bracket_delta_min(6, 3000, 17, par);
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_EQ(a.lower, c.lower);
  EXPECT_EQ(a.heuristic_upper, c.heuristic_upper);
  ASSERT_EQ(a.witness.has_value(), c.witness.has_value());
  if (a.witness) EXPECT_EQ(*a.witness, *c.witness);
}

class SeparatingExamples : public ::testing::TestWithParam<std::size_t> {};

TEST_P(SeparatingExamples, FoundAndCorrect) {
  const std::size_t n = GetParam();
  const auto found = separating_examples(n, 400, 5);
  ASSERT_FALSE(found.empty()) << "n = " << n;
  for (const Spectrum& s : found) {
    EXPECT_GE(classify(s).delta, 0.5);
    EXPECT_TRUE(classify(s).is_suleimanova);
    const ConditionReport r = full_report(s);
    EXPECT_TRUE(r.feasibility.feasible);
    EXPECT_TRUE(r.all_applicable_classical_fail());
    if (n == 26) {
      const ConditionVerdict v = nader_new3_n26(s);
      EXPECT_TRUE(v.applicable);
      EXPECT_EQ(v.satisfied, std::optional<bool>(false));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, SeparatingExamples, ::testing::Values(5u, 10u, 26u));

TEST(SeparatingExamplesArgs, RejectsSmallN) {
  EXPECT_THROW(separating_examples(4, 10, 0), std::invalid_argument);
}
