#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "zipfent/entropy.hpp"
#include "zipfent/zipf.hpp"

namespace zipfent {
namespace {

TEST(Harmonic, SingleTermIsOne) { EXPECT_EQ(harmonic(1, 2.7), 1.0); }

TEST(Harmonic, ThirdHarmonicNumber) { EXPECT_NEAR(harmonic(3, 1.0), 11.0 / 6.0, 1e-15); }

TEST(Harmonic, ApproachesZetaTwo) {
  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  const double h = harmonic(1'000'000, 2.0);
  EXPECT_NEAR(h, pi2_6, 1e-6);
  EXPECT_LT(h, pi2_6);
}

TEST(Harmonic, UniformCaseCountsTerms) { EXPECT_EQ(harmonic(1234, 0.0), 1234.0); }

TEST(Harmonic, MatchesLongDoubleReference) {
  for (const double s : {-1.5, -0.3, 0.25, 0.5, 1.0, 1.2, 2.0, 3.5}) {
    for (const std::uint64_t n : {2ULL, 17ULL, 1000ULL, 100'000ULL}) {
      const long double ref = oracle::harmonic(n, s);
      const double got = harmonic(n, s);
      EXPECT_LE(std::fabs((got - ref) / ref), 1e-12L) << "s=" << s << " N=" << n;
    }
  }
}

TEST(Harmonic, MonotoneInNAndS) {
  const std::vector<double> exponents{-1.0, 0.0, 0.5, 1.0, 1.5, 2.5};
  for (std::uint64_t n = 2; n <= 200; n += 7) {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      const double s = exponents[i];
      EXPECT_LT(harmonic(n, s), harmonic(n + 1, s));
      if (i + 1 < exponents.size()) {
        EXPECT_GT(harmonic(n, s), harmonic(n, exponents[i + 1]));
      }
    }
  }
}

TEST(Harmonic, BelowZetaForConvergentExponents) {
  for (const double s : {1.1, 1.5, 2.0, 4.0}) {
    const double z = zeta(s).value;
    for (const std::uint64_t n : {1ULL, 10ULL, 1000ULL, 100'000ULL}) EXPECT_LT(harmonic(n, s), z);
  }
}

TEST(Harmonic, RejectsBadArguments) {
  EXPECT_THROW(harmonic(0, 1.0), DomainError);
  EXPECT_THROW(harmonic(10, std::nan("")), DomainError);
  EXPECT_THROW(harmonic(10, INFINITY), DomainError);
}

TEST(ZipfModel, NormalizerInvertsHarmonic) {
  for (const double s : {-0.5, 0.0, 0.8, 1.0, 2.0}) {
    const ZipfModel m(s, 5000);
    EXPECT_NEAR(m.normalizer() * static_cast<double>(oracle::harmonic(5000, s)), 1.0, 1e-12);
    EXPECT_GT(m.normalizer(), 0.0);
  }
}

TEST(ZipfModel, RejectsBadParameters) {
  EXPECT_THROW(ZipfModel(1.0, 0), DomainError);
  EXPECT_THROW(ZipfModel(std::nan(""), 3), DomainError);
}

TEST(Probability, UniformCase) { EXPECT_DOUBLE_EQ(probability(ZipfModel(0.0, 4), 3), 0.25); }

TEST(Probability, HarmonicWeights) { EXPECT_NEAR(probability(ZipfModel(1.0, 3), 2), 3.0 / 11.0, 1e-15); }

TEST(Probability, TopRankIsInverseHarmonic) {
  const double expected = static_cast<double>(1.0L / oracle::harmonic(100, 1.5L));
  EXPECT_NEAR(probability(ZipfModel(1.5, 100), 1), expected, 1e-15);
}

TEST(Probability, RankOutOfRangeThrows) {
  const ZipfModel m(1.0, 10);
  EXPECT_THROW(probability(m, 0), DomainError);
  EXPECT_THROW(probability(m, 11), DomainError);
}

TEST(Probability, SumsToOne) {
  for (const double s : {-1.0, 0.0, 0.7, 1.0, 1.3, 3.0}) {
    for (const std::uint64_t n : {1ULL, 2ULL, 50ULL, 20'000ULL}) {
      const ZipfModel m(s, n);
      long double total = 0.0L;
      for (Rank k = 1; k <= n; ++k) total += probability(m, k);
      EXPECT_NEAR(static_cast<double>(total), 1.0, 1e-12) << "s=" << s << " N=" << n;
    }
  }
}

TEST(Probability, ShapeFollowsExponentSign) {
  const ZipfModel decreasing(0.9, 100);
  const ZipfModel flat(0.0, 100);
  for (Rank k = 1; k < 100; ++k) {
    EXPECT_GT(probability(decreasing, k), probability(decreasing, k + 1));
    EXPECT_EQ(probability(flat, k), probability(flat, k + 1));
  }
}

TEST(Sample, ZeroCountIsEmpty) { EXPECT_TRUE(sample(ZipfModel(1.2, 10), 0, 7).empty()); }

TEST(Sample, UniformTwoSymbols) {
  const auto draws = sample(ZipfModel(0.0, 2), 1'000'000, 1);
  std::size_t ones = 0;
  for (const Rank r : draws) ones += r == 1;
  const double freq = static_cast<double>(ones) / 1e6;
  EXPECT_NEAR(freq, 0.5, 0.003);
  EXPECT_NEAR(1.0 - freq, 0.5, 0.003);
}

TEST(Sample, TopRankFrequencyWithinThreeSigma) {
  const ZipfModel m(1.5, 1000);
  const auto draws = sample(m, 1'000'000, 1);
  std::size_t ones = 0;
  for (const Rank r : draws) {
    ASSERT_GE(r, 1u);
    ASSERT_LE(r, 1000u);
    ones += r == 1;
  }
  const double p = probability(m, 1);
  EXPECT_NEAR(static_cast<double>(ones) / 1e6, p, 3.0 * oracle::binomial_se(p, 1e6));
}

TEST(Sample, SeedReproducesDraws) {
  const ZipfModel m(1.1, 300);
  EXPECT_EQ(sample(m, 5000, 42), sample(m, 5000, 42));
  EXPECT_NE(sample(m, 5000, 42), sample(m, 5000, 43));
}

}  // namespace
}  // namespace zipfent
