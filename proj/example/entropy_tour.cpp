// Walks through the library: exact entropy, the Riemann-sum bracket, the
// infinite-lexicon limit, and an exponent fit on a sampled corpus.

#include <cstdio>

#include "zipfent/zipfent.hpp"

int main() {
  using namespace zipfent;

  std::printf("%6s %10s %12s %12s %12s\n", "s", "N", "lower", "exact", "upper");
  for (const double s : {1.0, 1.5, 2.0}) {
    for (const std::uint64_t n : {100ULL, 10'000ULL, 1'000'000ULL}) {
      const EntropyBounds b = entropy_bounds(ZipfModel(s, n));
      std::printf("%6.2f %10llu %12.6f %12.6f %12.6f\n", s, static_cast<unsigned long long>(n), b.lower,
                  b.exact.value_or(0.0), b.upper);
    }
    if (s > 1.0) std::printf("%6.2f %10s %12s %12.6f\n", s, "inf", "", entropy_infinite(s));
  }

  const RankFrequencyTable table = count_ranks(sample(ZipfModel(1.1, 20'000), 500'000, 7));
  const FitResult fit = fit_zipf(table, 5);
  const SmoothedDistribution smoothed = good_turing(table);
  std::printf("\nsampled corpus: %zu types, s_hat = %.4f (r^2 = %.4f)\n", table.distinct_types(), fit.s_hat,
              fit.r_squared);
  std::printf("plug-in entropy %.4f bits, smoothed %.4f bits, unseen mass %.4f\n", empirical_entropy(table),
              smoothed_entropy(smoothed, table), smoothed.p_unseen_total);
}
