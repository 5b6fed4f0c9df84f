#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "zipfent/compensated_sum.hpp"
#include "zipfent/error.hpp"
#include "zipfent/format.hpp"
#include "zipfent/text.hpp"
#include "zipfent/zipf.hpp"

namespace zipfent {

struct TypeCount {
  std::string type;
  std::uint64_t count = 0;

  friend bool operator==(const TypeCount&, const TypeCount&) = default;
};

/// Types ranked by descending count, ties in byte-lexicographic order of the
/// type. Rank k (1-based) is entries()[k - 1].
class RankFrequencyTable {
 public:
  RankFrequencyTable() = default;

  /// Ranks arbitrary (type, count) pairs. Counts must be positive and types unique.
  static RankFrequencyTable from_counts(std::vector<TypeCount> counts) {
    RankFrequencyTable table;
    std::sort(counts.begin(), counts.end(), [](const TypeCount& a, const TypeCount& b) {
      return a.count != b.count ? a.count > b.count : a.type < b.type;
    });
    std::unordered_set<std::string_view> seen;
    seen.reserve(counts.size());
    for (const TypeCount& entry : counts) {
      if (entry.count == 0) throw DomainError("RankFrequencyTable: counts must be positive");
      if (!seen.insert(entry.type).second) {
        throw DomainError("RankFrequencyTable: duplicate type '" + entry.type + "'");
      }
      table.total_ += entry.count;
    }
    table.entries_ = std::move(counts);
    return table;
  }

  [[nodiscard]] const std::vector<TypeCount>& entries() const { return entries_; }
  [[nodiscard]] std::uint64_t total_tokens() const { return total_; }
  [[nodiscard]] std::size_t distinct_types() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }

  [[nodiscard]] std::uint64_t count(std::size_t rank) const { return entries_.at(rank - 1).count; }

  /// count / total_tokens for a 1-based rank.
  [[nodiscard]] double probability(std::size_t rank) const {
    return static_cast<double>(count(rank)) / static_cast<double>(total_);
  }

  /// The top `k` ranks as a table of their own (probabilities renormalize).
  [[nodiscard]] RankFrequencyTable truncated(std::size_t k) const {
    const auto end = entries_.begin() + static_cast<std::ptrdiff_t>(std::min(k, entries_.size()));
    return from_counts(std::vector<TypeCount>(entries_.begin(), end));
  }

  friend bool operator==(const RankFrequencyTable&, const RankFrequencyTable&) = default;

 private:
  std::vector<TypeCount> entries_;
  std::uint64_t total_ = 0;
};

/// Incremental type counter. Merging counters is order-independent.
class TokenCounter {
 public:
  void add(std::string_view token, std::uint64_t times = 1) {
    auto it = counts_.find(std::string(token));
    if (it == counts_.end()) {
      counts_.emplace(std::string(token), times);
    } else {
      it->second += times;
    }
  }

  void merge(const TokenCounter& other) {
    for (const auto& [type, n] : other.counts_) add(type, n);
  }

  [[nodiscard]] RankFrequencyTable table() const {
    std::vector<TypeCount> counts;
    counts.reserve(counts_.size());
    for (const auto& [type, n] : counts_) counts.push_back({type, n});
    return RankFrequencyTable::from_counts(std::move(counts));
  }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
};

inline RankFrequencyTable count(std::span<const std::string> tokens) {
  TokenCounter counter;
  for (const auto& token : tokens) counter.add(token);
  return counter.table();
}

/// Letters-only name for a model rank (bijective base 26: 1 -> "a", 27 -> "aa"),
/// so synthetic corpora survive a round trip through the tokenizer.
inline std::string synthetic_type(Rank rank) {
  std::string name;
  for (; rank > 0; rank = (rank - 1) / 26) name.push_back(static_cast<char>('a' + (rank - 1) % 26));
  return {name.rbegin(), name.rend()};
}

inline RankFrequencyTable count_ranks(std::span<const Rank> ranks) {
  std::unordered_map<Rank, std::uint64_t> counts;
  for (const Rank r : ranks) ++counts[r];
  std::vector<TypeCount> entries;
  entries.reserve(counts.size());
  for (const auto& [rank, n] : counts) entries.push_back({synthetic_type(rank), n});
  return RankFrequencyTable::from_counts(std::move(entries));
}

/// Tokenizes and counts a text stream in fixed-size chunks.
inline RankFrequencyTable count_stream(std::istream& in) {
  TokenCounter counter;
  Tokenizer tokenizer;
  auto emit = [&](std::string_view token) { counter.add(token); };
  std::string buffer(1 << 16, '\0');
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    const auto got = static_cast<std::size_t>(in.gcount());
    if (got == 0) break;
    tokenizer.feed(std::string_view(buffer.data(), got), emit);
  }
  if (in.bad()) throw IoError("read error while counting tokens");
  tokenizer.finish(emit);
  return counter.table();
}

inline RankFrequencyTable count_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return count_stream(in);
}

/// Plug-in entropy in bits, p = count / total.
inline double empirical_entropy(const RankFrequencyTable& table) {
  if (table.total_tokens() == 0) throw DomainError("empirical_entropy: empty table");
  CompensatedSum<double> acc;
  for (std::size_t k = table.distinct_types(); k >= 1; --k) {
    const double p = table.probability(k);
    acc -= p * std::log2(p);
  }
  return std::max(acc.value(), 0.0);
}

/// CSV with header `rank,type,count,probability`, LF line endings.
/// `top_k` limits the number of rows; probabilities stay relative to the full table.
inline void write_csv(std::ostream& out, const RankFrequencyTable& table,
                      std::optional<std::size_t> top_k = std::nullopt) {
  out << "rank,type,count,probability\n";
  const std::size_t rows = std::min(table.distinct_types(), top_k.value_or(table.distinct_types()));
  for (std::size_t k = 1; k <= rows; ++k) {
    const TypeCount& e = table.entries()[k - 1];
    out << k << ',' << csv_field(e.type) << ',' << e.count << ',' << format_real(table.probability(k))
        << '\n';
  }
}

}  // namespace zipfent
