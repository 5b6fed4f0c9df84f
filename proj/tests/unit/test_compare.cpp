#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "zipfent/compare.hpp"

namespace zipfent {
namespace {

RankFrequencyTable sampled(double s, std::uint64_t seed, std::size_t tokens = 100'000) {
  return count_ranks(sample(ZipfModel(s, 2000), tokens, seed));
}

RankFrequencyTable scaled(const RankFrequencyTable& t, std::uint64_t factor) {
  std::vector<TypeCount> counts = t.entries();
  for (auto& e : counts) e.count *= factor;
  return RankFrequencyTable::from_counts(std::move(counts));
}

TEST(Dissimilarity, IdenticalTablesAreZero) {
  const auto t = sampled(1.1, 1, 10'000);
  const DissimilarityReport r = zipf_dissimilarity(t, t);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.shared_ranks, t.distinct_types());
}

TEST(Dissimilarity, HandComputed) {
  // p_a = (1/2, 1/2), p_b = (3/4, 1/4, ...): K = 2.
  const auto a = RankFrequencyTable::from_counts({{"x", 1}, {"y", 1}});
  const auto b = RankFrequencyTable::from_counts({{"x", 6}, {"y", 1}, {"z", 1}});
  const double d1 = std::log(0.5) - std::log(0.75);
  const double d2 = std::log(0.5) - std::log(0.125);
  const DissimilarityReport r = zipf_dissimilarity(a, b);
  EXPECT_EQ(r.shared_ranks, 2u);
  ASSERT_EQ(r.per_rank_contributions.size(), 2u);
  EXPECT_NEAR(r.per_rank_contributions[0], d1 * d1, 1e-15);
  EXPECT_NEAR(r.value, (d1 * d1 + d2 * d2) / 2.0, 1e-15);
}

TEST(Dissimilarity, SymmetricAndNonNegative) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto a = sampled(1.0 + 0.05 * static_cast<double>(seed), seed, 5000);
    const auto b = sampled(1.3, seed + 100, 8000);
    const double ab = zipf_dissimilarity(a, b).value;
    EXPECT_EQ(ab, zipf_dissimilarity(b, a).value);
    EXPECT_GE(ab, 0.0);
  }
}

TEST(Dissimilarity, InvariantUnderCountScaling) {
  const auto a = sampled(1.1, 3, 20'000);
  const auto b = sampled(1.4, 4, 20'000);
  for (const std::uint64_t factor : {2u, 3u, 17u}) {
    EXPECT_EQ(zipf_dissimilarity(scaled(a, factor), b).value, zipf_dissimilarity(a, b).value) << factor;
  }
}

TEST(Dissimilarity, MaxRankCapsComparison) {
  const auto a = sampled(1.1, 5, 20'000);
  const auto b = sampled(1.6, 6, 20'000);
  const DissimilarityReport full = zipf_dissimilarity(a, b);
  const DissimilarityReport capped = zipf_dissimilarity(a, b, 10);
  EXPECT_EQ(capped.shared_ranks, 10u);
  double head = 0.0;
  for (std::size_t k = 0; k < 10; ++k) head += full.per_rank_contributions[k];
  EXPECT_NEAR(capped.value, head / 10.0, 1e-12);
  EXPECT_THROW(zipf_dissimilarity(a, b, 0), DomainError);
}

TEST(Dissimilarity, EmptyTableIsDomainError) {
  const auto a = sampled(1.1, 1, 100);
  EXPECT_THROW(zipf_dissimilarity(a, RankFrequencyTable{}), DomainError);
  EXPECT_THROW(zipf_dissimilarity(RankFrequencyTable{}, a), DomainError);
}

TEST(Dissimilarity, SameSourceCloserThanDifferentSource) {
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    const auto a = sampled(1.1, 10 + trial);
    const auto same = sampled(1.1, 20 + trial);
    const auto other = sampled(1.6, 30 + trial);
    EXPECT_LT(zipf_dissimilarity(a, same).value, zipf_dissimilarity(a, other).value) << trial;
  }
}

}  // namespace
}  // namespace zipfent
