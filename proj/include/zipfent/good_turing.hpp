#pragma once

// Simple Good-Turing re-estimation (Gale & Sampson's SGT).
//
// With N_r types seen exactly r times and T tokens in total, the mass N_1/T
// is reserved for unseen types. Adjusted counts come from the Turing
// estimate (r+1) N_{r+1} / N_r for small r and from a log-log regression
// S(r) of the smoothed frequencies of frequencies once the two estimates
// agree within 1.65 standard deviations of the Turing estimate.

#include <cmath>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "zipfent/compensated_sum.hpp"
#include "zipfent/corpus.hpp"
#include "zipfent/error.hpp"

namespace zipfent {

enum class SmoothingFallback {
  none,
  /// N_1 = 0: nothing to re-estimate from, plug-in probabilities are used.
  no_singletons,
  /// Every type seen once: the unseen mass would be 1, plug-in probabilities are used.
  all_singletons,
};

inline std::string_view to_string(SmoothingFallback f) {
  switch (f) {
    case SmoothingFallback::none: return "none";
    case SmoothingFallback::no_singletons: return "no-singletons";
    case SmoothingFallback::all_singletons: return "all-singletons";
  }
  return "unknown";
}

struct SmoothedDistribution {
  /// Per-type probability for types observed r times.
  std::map<std::uint64_t, double> probs;
  /// Total mass reserved for types never observed.
  double p_unseen_total = 0.0;
  /// N_r.
  std::map<std::uint64_t, std::uint64_t> freq_of_freqs;
  /// r*, the re-estimated count.
  std::map<std::uint64_t, double> adjusted_counts;
  std::uint64_t total_tokens = 0;
  /// N_1 / T as computed from the data, even when a fallback applies.
  double turing_unseen_estimate = 0.0;
  SmoothingFallback fallback = SmoothingFallback::none;
  /// Slope of log Z_r on log r; SGT assumes it is below -1.
  double regression_slope = 0.0;

  [[nodiscard]] double observed_mass() const {
    CompensatedSum<double> acc;
    for (const auto& [r, n] : freq_of_freqs) acc += static_cast<double>(n) * probs.at(r);
    return acc.value();
  }
};

inline std::map<std::uint64_t, std::uint64_t> frequency_of_frequencies(const RankFrequencyTable& table) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& e : table.entries()) ++out[e.count];
  return out;
}

inline SmoothedDistribution good_turing(const RankFrequencyTable& table) {
  if (table.total_tokens() == 0) throw DomainError("good_turing: empty table");

  SmoothedDistribution dist;
  dist.total_tokens = table.total_tokens();
  dist.freq_of_freqs = frequency_of_frequencies(table);
  const double total = static_cast<double>(dist.total_tokens);
  const auto n_of = [&](std::uint64_t r) -> double {
    const auto it = dist.freq_of_freqs.find(r);
    return it == dist.freq_of_freqs.end() ? 0.0 : static_cast<double>(it->second);
  };

  const double n1 = n_of(1);
  dist.turing_unseen_estimate = n1 / total;

  if (n1 == 0.0 || n1 == total) {
    dist.fallback = n1 == 0.0 ? SmoothingFallback::no_singletons : SmoothingFallback::all_singletons;
    for (const auto& [r, n] : dist.freq_of_freqs) {
      dist.adjusted_counts[r] = static_cast<double>(r);
      dist.probs[r] = static_cast<double>(r) / total;
    }
    return dist;
  }

  dist.p_unseen_total = dist.turing_unseen_estimate;

  // Averaging transform Z_r = N_r / (0.5 (t - q)), q and t the neighbouring
  // observed counts; the last row uses t = 2r - q.
  std::vector<std::uint64_t> rs;
  for (const auto& [r, n] : dist.freq_of_freqs) rs.push_back(r);
  std::vector<double> log_r(rs.size());
  std::vector<double> log_z(rs.size());
  for (std::size_t j = 0; j < rs.size(); ++j) {
    const double r = static_cast<double>(rs[j]);
    const double q = j == 0 ? 0.0 : static_cast<double>(rs[j - 1]);
    const double t = j + 1 < rs.size() ? static_cast<double>(rs[j + 1]) : 2.0 * r - q;
    log_r[j] = std::log(r);
    log_z[j] = std::log(n_of(rs[j]) / (0.5 * (t - q)));
  }

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t j = 0; j < rs.size(); ++j) {
    mean_x += log_r[j];
    mean_y += log_z[j];
  }
  mean_x /= static_cast<double>(rs.size());
  mean_y /= static_cast<double>(rs.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t j = 0; j < rs.size(); ++j) {
    sxy += (log_r[j] - mean_x) * (log_z[j] - mean_y);
    sxx += (log_r[j] - mean_x) * (log_r[j] - mean_x);
  }
  // At least two distinct r exist here (N_1 > 0 and N_1 < T), so sxx > 0.
  const double slope = sxy / sxx;
  dist.regression_slope = slope;

  // (r+1) S(r+1) / S(r) with S(r) = exp(a + b ln r).
  const auto smoothed = [&](double r) { return r * std::pow(1.0 + 1.0 / r, slope + 1.0); };

  bool use_regression = false;
  for (const std::uint64_t ri : rs) {
    const double r = static_cast<double>(ri);
    const double y = smoothed(r);
    if (!use_regression) {
      const double n_r = n_of(ri);
      const double n_next = n_of(ri + 1);
      if (n_next == 0.0) {
        use_regression = true;
      } else {
        const double x = (r + 1.0) * n_next / n_r;
        const double sd = std::sqrt((r + 1.0) * (r + 1.0) * n_next / (n_r * n_r) * (1.0 + n_next / n_r));
        if (std::abs(x - y) <= 1.65 * sd) {
          use_regression = true;
        } else {
          dist.adjusted_counts[ri] = x;
        }
      }
    }
    if (use_regression) dist.adjusted_counts[ri] = y;
  }

  CompensatedSum<double> renorm;
  for (const auto& [r, r_star] : dist.adjusted_counts) renorm += n_of(r) * r_star;
  const double scale = (1.0 - dist.p_unseen_total) / renorm.value();
  for (const auto& [r, r_star] : dist.adjusted_counts) dist.probs[r] = r_star * scale;
  return dist;
}

/// Entropy in bits over the observed types using smoothed probabilities.
/// The unseen mass has no per-type identity and is left out unless
/// `unseen_as_symbol` treats it as one extra symbol.
inline double smoothed_entropy(const SmoothedDistribution& dist, const RankFrequencyTable& table,
                               bool unseen_as_symbol = false) {
  if (dist.total_tokens != table.total_tokens() ||
      dist.freq_of_freqs != frequency_of_frequencies(table)) {
    throw DomainError("smoothed_entropy: distribution was not produced from this table");
  }
  CompensatedSum<double> acc;
  for (const auto& [r, n] : dist.freq_of_freqs) {
    const double p = dist.probs.at(r);
    acc -= static_cast<double>(n) * p * std::log2(p);
  }
  if (unseen_as_symbol && dist.p_unseen_total > 0.0) {
    acc -= dist.p_unseen_total * std::log2(dist.p_unseen_total);
  }
  return acc.value();
}

}  // namespace zipfent
