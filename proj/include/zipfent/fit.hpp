#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zipfent/corpus.hpp"
#include "zipfent/error.hpp"

namespace zipfent {

struct FitResult {
  /// Estimated exponent, minus the log-log slope.
  double s_hat = 0.0;
  /// exp(intercept) / total: the fitted probability at rank 1.
  double c_hat = 0.0;
  double r_squared = 0.0;
  std::uint64_t min_rank = 0;
  std::uint64_t max_rank = 0;
};

/// Least-squares line through (ln rank, ln value) for values sorted
/// non-increasingly by rank. Only values >= `min_value` take part; tied values
/// share their mid-rank. `total` converts the intercept into a probability.
inline FitResult fit_rank_values(std::span<const double> values, double min_value, double total) {
  std::size_t usable = 0;
  while (usable < values.size() && values[usable] >= min_value && values[usable] > 0.0) ++usable;
  if (usable < 3) {
    throw InsufficientDataError("fit: need at least 3 ranks at or above the minimum, have " +
                                std::to_string(usable));
  }

  std::vector<double> x(usable);
  std::vector<double> y(usable);
  for (std::size_t begin = 0; begin < values.size() && begin < usable;) {
    std::size_t end = begin + 1;
    while (end < values.size() && values[end] == values[begin]) ++end;
    // Ranks begin+1 .. end share the mid-rank.
    const double mid_rank = 0.5 * static_cast<double>(begin + 1 + end);
    for (std::size_t i = begin; i < end && i < usable; ++i) {
      x[i] = std::log(mid_rank);
      y[i] = std::log(values[i]);
    }
    begin = end;
  }

  const double n = static_cast<double>(usable);
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < usable; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < usable; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }

  FitResult fit;
  // All points tied at one mid-rank: a flat rank-frequency relation.
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  const double intercept = mean_y - slope * mean_x;
  fit.s_hat = slope == 0.0 ? 0.0 : -slope;
  fit.c_hat = std::exp(intercept) / total;
  if (syy > 0.0) {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < usable; ++i) {
      const double r = y[i] - (intercept + slope * x[i]);
      ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  } else {
    fit.r_squared = 1.0;
  }
  fit.min_rank = 1;
  fit.max_rank = usable;
  return fit;
}

/// Zipf exponent from a rank-frequency table by log-log OLS over the ranks
/// whose count is at least `min_count`.
inline FitResult fit_zipf(const RankFrequencyTable& table, std::uint64_t min_count = 1) {
  std::vector<double> counts;
  counts.reserve(table.distinct_types());
  for (const auto& e : table.entries()) counts.push_back(static_cast<double>(e.count));
  return fit_rank_values(counts, static_cast<double>(std::max<std::uint64_t>(min_count, 1)),
                         static_cast<double>(table.total_tokens()));
}

}  // namespace zipfent
