#pragma once

// Monkey-typing text: each keystroke is a space with probability q, otherwise
// one of M letters uniformly. Words are the non-empty runs between spaces.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zipfent/compensated_sum.hpp"
#include "zipfent/error.hpp"
#include "zipfent/zipf.hpp"

namespace zipfent {

inline constexpr int kMaxAlphabet = 26;
inline constexpr std::uint64_t kMaxOracleWords = 10'000'000;

struct MonkeyConfig {
  int alphabet_size = 2;
  double space_probability = 1.0 / 3.0;
  std::uint64_t token_count = 0;
  std::uint64_t seed = 0;

  void validate() const {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
      throw DomainError("monkey: alphabet size must be in [1, 26]");
    }
    if (!(space_probability > 0.0 && space_probability < 1.0)) {
      throw DomainError("monkey: space probability must be in (0, 1)");
    }
  }
};

/// Exactly `token_count` words; the same config always gives the same words.
inline std::vector<std::string> generate(const MonkeyConfig& config) {
  config.validate();
  std::vector<std::string> words;
  words.reserve(config.token_count);
  std::mt19937_64 rng(config.seed);
  const double q = config.space_probability;
  const double letter_width = (1.0 - q) / config.alphabet_size;

  std::string word;
  while (words.size() < config.token_count) {
    const double u = uniform_unit(rng);
    if (u < q) {
      if (!word.empty()) {
        words.push_back(std::move(word));
        word.clear();
      }
      continue;
    }
    const int letter = std::min(config.alphabet_size - 1, static_cast<int>((u - q) / letter_width));
    word.push_back(static_cast<char>('a' + letter));
  }
  return words;
}

struct WordProbability {
  std::string word;
  double probability = 0.0;
};

/// Every word of length 1..max_word_length with its exact probability
/// q ((1-q)/M)^L, renormalized over the enumerated set. Shorter words come
/// first; words of equal length tie and are listed lexicographically.
inline std::vector<WordProbability> theoretical_table(const MonkeyConfig& config, int max_word_length) {
  config.validate();
  if (max_word_length < 1) throw DomainError("monkey oracle: max word length must be >= 1");

  const auto m = static_cast<std::uint64_t>(config.alphabet_size);
  std::uint64_t total_words = 0;
  std::uint64_t level = 1;
  for (int len = 1; len <= max_word_length; ++len) {
    level *= m;
    total_words += level;
    if (total_words > kMaxOracleWords) {
      throw ResourceError("monkey oracle: more than 10^7 words to enumerate");
    }
  }

  const double q = config.space_probability;
  const double letter = (1.0 - q) / config.alphabet_size;
  std::vector<WordProbability> table;
  table.reserve(total_words);
  CompensatedSum<double> mass;

  std::vector<int> digits;
  for (int len = 1; len <= max_word_length; ++len) {
    const double p = q * std::pow(letter, len);
    digits.assign(static_cast<std::size_t>(len), 0);
    while (true) {
      std::string word(static_cast<std::size_t>(len), 'a');
      for (int i = 0; i < len; ++i) word[static_cast<std::size_t>(i)] = static_cast<char>('a' + digits[static_cast<std::size_t>(i)]);
      table.push_back({std::move(word), p});
      mass += p;
      // Odometer increment, last position fastest.
      int pos = len - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == config.alphabet_size) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }

  const double total = mass.value();
  for (auto& entry : table) entry.probability /= total;
  return table;
}

}  // namespace zipfent
