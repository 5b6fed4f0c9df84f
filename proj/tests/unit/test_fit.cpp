#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "zipfent/fit.hpp"

namespace zipfent {
namespace {

RankFrequencyTable table_of(const std::vector<std::uint64_t>& counts) {
  std::vector<TypeCount> entries;
  for (std::size_t i = 0; i < counts.size(); ++i) entries.push_back({synthetic_type(i + 1), counts[i]});
  return RankFrequencyTable::from_counts(std::move(entries));
}

// 2520 = lcm(1..10), so 2520^p / k^p is an integer for k <= 10.
TEST(FitZipf, RecoversExactPowerLaws) {
  std::vector<std::uint64_t> inverse;
  std::vector<std::uint64_t> inverse_square;
  for (std::uint64_t k = 1; k <= 10; ++k) {
    inverse.push_back(2520 / k);
    inverse_square.push_back(2520ULL * 2520ULL / (k * k));
  }
  const FitResult one = fit_zipf(table_of(inverse));
  EXPECT_NEAR(one.s_hat, 1.0, 1e-9);
  EXPECT_NEAR(one.r_squared, 1.0, 1e-12);
  EXPECT_NEAR(one.c_hat, 2520.0 / std::accumulate(inverse.begin(), inverse.end(), 0.0), 1e-12);
  EXPECT_NEAR(fit_zipf(table_of(inverse_square)).s_hat, 2.0, 1e-9);
}

TEST(FitZipf, RoundedPowerLaw) {
  std::vector<std::uint64_t> counts;
  for (int k = 1; k <= 1000; ++k) {
    counts.push_back(std::max<std::uint64_t>(1, std::llround(1e6 * std::pow(k, -1.5))));
  }
  const FitResult fit = fit_zipf(table_of(counts));
  EXPECT_GE(fit.s_hat, 1.45);
  EXPECT_LE(fit.s_hat, 1.55);
  EXPECT_EQ(fit.max_rank, 1000u);
}

TEST(FitZipf, FlatTableHasZeroExponent) {
  const FitResult fit = fit_zipf(table_of({7, 7, 7, 7, 7}));
  EXPECT_EQ(fit.s_hat, 0.0);
  EXPECT_GE(fit.r_squared, 0.0);
  EXPECT_LE(fit.r_squared, 1.0);
}

TEST(FitZipf, TiesShareMidRank) {
  // Counts 8, 2, 2: the tied pair sits at mid-rank 2.5, so the fit is the
  // line through (ln 1, ln 8) and (ln 2.5, ln 2) (twice).
  const FitResult fit = fit_zipf(table_of({8, 2, 2}));
  EXPECT_NEAR(fit.s_hat, std::log(4.0) / std::log(2.5), 1e-12);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
}

TEST(FitZipf, MinCountSelectsHead) {
  const FitResult fit = fit_zipf(table_of({100, 50, 25, 3, 2, 1}), 25);
  EXPECT_EQ(fit.max_rank, 3u);
  EXPECT_NEAR(fit.s_hat, std::log(4.0) / std::log(3.0), 0.1);
}

TEST(FitZipf, InsufficientData) {
  EXPECT_THROW(fit_zipf(table_of({5, 4})), InsufficientDataError);
  EXPECT_THROW(fit_zipf(table_of({9, 8, 2, 1}), 5), InsufficientDataError);
}

TEST(FitZipf, RSquaredInUnitInterval) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const FitResult fit = fit_zipf(count_ranks(sample(ZipfModel(0.8, 500), 5000, seed)));
    EXPECT_GE(fit.r_squared, 0.0);
    EXPECT_LE(fit.r_squared, 1.0);
    EXPECT_TRUE(std::isfinite(fit.s_hat));
  }
}

TEST(FitZipf, RecoversSampledExponent) {
  const auto t = count_ranks(sample(ZipfModel(1.2, 5000), 1'000'000, 11));
  EXPECT_NEAR(fit_zipf(t, 5).s_hat, 1.2, 0.05);
}

}  // namespace
}  // namespace zipfent
