#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "zipfent/compensated_sum.hpp"
#include "zipfent/error.hpp"

namespace zipfent {

using Rank = std::uint64_t;

/// Generalized harmonic number H(N, s) = sum_{n=1..N} n^{-s}.
///
/// Terms are accumulated smallest first (descending n for s > 0, ascending
/// for s < 0) with compensated summation.
inline double harmonic(std::uint64_t n, double s) {
  if (n < 1) throw DomainError("harmonic: N must be >= 1");
  if (!std::isfinite(s)) throw DomainError("harmonic: s must be finite");
  if (s == 0.0) return static_cast<double>(n);

  CompensatedSum<double> acc;
  if (s > 0.0) {
    for (std::uint64_t k = n; k >= 1; --k) acc += std::pow(static_cast<double>(k), -s);
  } else {
    for (std::uint64_t k = 1; k <= n; ++k) acc += std::pow(static_cast<double>(k), -s);
  }
  return acc.value();
}

/// Zipf distribution over ranks 1..N with p_k = C k^{-s}.
class ZipfModel {
 public:
  ZipfModel(double s, std::uint64_t n) : s_(s), n_(n) {
    if (n < 1) throw DomainError("ZipfModel: lexicon size N must be >= 1");
    if (!std::isfinite(s)) throw DomainError("ZipfModel: exponent s must be finite");
    harmonic_ = harmonic(n, s);
    normalizer_ = 1.0 / harmonic_;
    if (!(normalizer_ > 0.0) || !std::isfinite(normalizer_)) {
      throw DomainError("ZipfModel: normalizer is not representable for s=" + std::to_string(s));
    }
  }

  [[nodiscard]] double exponent() const { return s_; }
  [[nodiscard]] std::uint64_t size() const { return n_; }
  /// C = 1 / H(N, s).
  [[nodiscard]] double normalizer() const { return normalizer_; }
  [[nodiscard]] double harmonic_number() const { return harmonic_; }

  /// Unchecked p_k; callers guarantee 1 <= k <= N.
  [[nodiscard]] double probability_unchecked(Rank k) const {
    return normalizer_ * std::pow(static_cast<double>(k), -s_);
  }

 private:
  double s_;
  std::uint64_t n_;
  double harmonic_ = 0.0;
  double normalizer_ = 0.0;
};

inline double probability(const ZipfModel& model, Rank k) {
  if (k < 1 || k > model.size()) {
    throw DomainError("probability: rank " + std::to_string(k) + " outside [1, " +
                      std::to_string(model.size()) + "]");
  }
  return model.probability_unchecked(k);
}

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit engine draw.
/// Fixed arithmetic so streams are identical across standard libraries.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Inverse-CDF sampler over a precomputed cumulative table.
class ZipfSampler {
 public:
  explicit ZipfSampler(const ZipfModel& model) : cdf_(model.size()) {
    CompensatedSum<double> acc;
    for (Rank k = 1; k <= model.size(); ++k) {
      acc += model.probability_unchecked(k);
      cdf_[k - 1] = acc.value();
    }
    // Force the last entry to 1 so every u in [0,1) maps to a valid rank.
    cdf_.back() = 1.0;
  }

  Rank draw(std::mt19937_64& rng) const {
    const double u = uniform_unit(rng);
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const auto index = static_cast<Rank>(it - cdf_.begin());
    return std::min<Rank>(index + 1, cdf_.size());
  }

  [[nodiscard]] const std::vector<double>& cumulative() const { return cdf_; }

 private:
  std::vector<double> cdf_;
};

/// `count` i.i.d. ranks; identical output for identical (model, count, seed).
inline std::vector<Rank> sample(const ZipfModel& model, std::size_t count, std::uint64_t seed) {
  std::vector<Rank> out;
  if (count == 0) return out;
  out.reserve(count);
  const ZipfSampler sampler(model);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.draw(rng));
  return out;
}

}  // namespace zipfent
