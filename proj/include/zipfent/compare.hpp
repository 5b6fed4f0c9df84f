#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "zipfent/compensated_sum.hpp"
#include "zipfent/corpus.hpp"
#include "zipfent/error.hpp"

namespace zipfent {

/// Name reported alongside dissimilarity values.
inline constexpr std::string_view kDissimilarityMeasure = "mean-squared-log-rank";

struct DissimilarityReport {
  double value = 0.0;
  std::size_t shared_ranks = 0;
  /// (ln p_a(k) - ln p_b(k))^2 for k = 1..shared_ranks.
  std::vector<double> per_rank_contributions;
};

/// Distance between two Zipf plots: the mean over the first K ranks of the
/// squared difference of log rank probabilities, where K is the smaller
/// vocabulary (optionally capped by `max_rank`).
inline DissimilarityReport zipf_dissimilarity(const RankFrequencyTable& a, const RankFrequencyTable& b,
                                              std::optional<std::size_t> max_rank = std::nullopt) {
  if (a.empty() || b.empty()) throw DomainError("zipf_dissimilarity: both tables must be non-empty");
  if (max_rank && *max_rank == 0) throw DomainError("zipf_dissimilarity: max_rank must be >= 1");

  std::size_t k = std::min(a.distinct_types(), b.distinct_types());
  if (max_rank) k = std::min(k, *max_rank);

  DissimilarityReport report;
  report.shared_ranks = k;
  report.per_rank_contributions.reserve(k);
  CompensatedSum<double> acc;
  for (std::size_t rank = 1; rank <= k; ++rank) {
    const double d = std::log(a.probability(rank)) - std::log(b.probability(rank));
    report.per_rank_contributions.push_back(d * d);
    acc += d * d;
  }
  report.value = acc.value() / static_cast<double>(k);
  return report;
}

}  // namespace zipfent
