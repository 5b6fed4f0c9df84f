#pragma once

// zipfent command-line front end. Every subcommand writes deterministic CSV
// or JSON; diagnostics go to the error stream as one line
// `zipfent: error[<code>]: <message>`.
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zipfent/zipfent.hpp"

namespace zipfent::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kDomain = 3,
  kIo = 4,
};

enum class Format { csv, json };

using Json = nlohmann::ordered_json;

namespace detail {

inline Json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return round_significant(value);
}

inline Json number(std::optional<double> value) { return value ? number(*value) : Json(nullptr); }

inline void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

/// s_min, s_min + step, ... up to s_max, each snapped to the output precision.
inline std::vector<double> exponent_grid(double s_min, double s_max, double step) {
  if (!std::isfinite(s_min) || !std::isfinite(s_max) || s_max < s_min) {
    throw DomainError("exponent grid: need finite s-min <= s-max");
  }
  if (s_max > s_min && !(step > 0.0)) throw DomainError("exponent grid: s-step must be > 0");
  const auto steps = s_max > s_min ? static_cast<std::size_t>(std::floor((s_max - s_min) / step + 1e-9)) : 0;
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) grid.push_back(round_significant(s_min + step * static_cast<double>(i)));
  return grid;
}

struct Options {
  std::string format;
  std::string output;

  double s = 1.0;
  std::uint64_t n = 0;
  double s_min = 1.0;
  std::optional<double> s_max;
  double s_step = 0.1;
  std::vector<std::uint64_t> n_list;

  std::string path_a;
  std::string path_b;
  std::uint64_t min_count = 5;
  bool no_smoothing = false;
  bool unseen_as_symbol = false;
  std::size_t top_k = 0;
  std::string table_path;
  std::size_t max_rank = 0;

  int alphabet = 2;
  double space_probability = 1.0 / 3.0;
  std::uint64_t token_count = 1000;
  std::uint64_t seed = 1;
  bool emit_table = false;
  bool oracle = false;
  int max_length = 12;

  [[nodiscard]] Format format_or(Format fallback) const {
    if (format.empty()) return fallback;
    return format == "json" ? Format::json : Format::csv;
  }
};

inline void cmd_entropy(const Options& o, std::ostream& out) {
  const ZipfModel model(o.s, o.n);
  EntropyBounds b;
  if (o.s > 0.0) {
    b = entropy_bounds(model);
  } else {
    // No bracket exists for s <= 0; the direct sum is its own bound.
    if (o.n > kExactEntropyLimit) throw DomainError("entropy: s <= 0 needs N <= 10^7 for the direct sum");
    const double h = entropy_exact(model);
    b = {h, h, h, BoundMethod::exact_sum, o.n};
  }

  if (o.format_or(Format::csv) == Format::json) {
    Json doc;
    doc["s"] = number(o.s);
    doc["N"] = o.n;
    doc["lower"] = number(b.lower);
    doc["upper"] = number(b.upper);
    doc["exact"] = number(b.exact);
    doc["gap"] = number(b.gap());
    doc["method"] = std::string(to_string(b.method));
    doc["head_terms"] = b.head_terms;
    write_json(out, doc);
    return;
  }
  out << "s,N,lower,upper,exact,gap,method,head_terms\n"
      << format_real(o.s) << ',' << o.n << ',' << format_real(b.lower) << ',' << format_real(b.upper) << ','
      << (b.exact ? format_real(*b.exact) : std::string()) << ',' << format_real(b.gap()) << ','
      << to_string(b.method) << ',' << b.head_terms << '\n';
}

inline void cmd_surface(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<double> s_grid = exponent_grid(o.s_min, o.s_max.value_or(o.s_min), o.s_step);
  if (o.n_list.empty()) throw DomainError("surface: --n needs at least one lexicon size");
  const std::vector<SurfacePoint> points = entropy_surface(s_grid, o.n_list);

  for (const auto& p : points) {
    if (!p.ok()) {
      err << "zipfent: warning[domain]: s=" << format_real(p.s) << " N=" << p.n << ": " << *p.error << '\n';
    }
  }
  if (o.format_or(Format::csv) == Format::json) {
    Json rows = Json::array();
    for (const auto& p : points) {
      rows.push_back({{"s", number(p.s)}, {"N", p.n}, {"h_mid", number(p.h_mid)}, {"h_gap", number(p.h_gap)}});
    }
    write_json(out, Json{{"points", rows}});
    return;
  }
  out << "s,N,h_mid,h_gap\n";
  for (const auto& p : points) {
    out << format_real(p.s) << ',' << p.n << ',' << format_real(p.h_mid) << ',' << format_real(p.h_gap) << '\n';
  }
}

inline void cmd_infinite(const Options& o, std::ostream& out) {
  const std::vector<double> s_grid = exponent_grid(o.s_min, o.s_max.value_or(o.s_min), o.s_step);
  if (s_grid.front() <= 1.0) throw DivergenceError("infinite: the infinite lexicon needs s > 1");
  const bool paired = o.n > 0;

  struct Row {
    double s;
    double infinite;
    double finite;
  };
  std::vector<Row> rows;
  for (const double s : s_grid) {
    rows.push_back({s, entropy_infinite(s), paired ? entropy_exact(ZipfModel(s, o.n)) : 0.0});
  }

  if (o.format_or(Format::csv) == Format::json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row{{"s", number(r.s)}, {"h_infinite", number(r.infinite)}};
      if (paired) row["h_finite"] = number(r.finite);
      arr.push_back(row);
    }
    Json doc;
    if (paired) doc["N"] = o.n;
    doc["rows"] = arr;
    write_json(out, doc);
    return;
  }
  out << (paired ? "s,h_infinite,h_finite\n" : "s,h_infinite\n");
  for (const auto& r : rows) {
    out << format_real(r.s) << ',' << format_real(r.infinite);
    if (paired) out << ',' << format_real(r.finite);
    out << '\n';
  }
}

inline void cmd_zeta(const Options& o, std::ostream& out) {
  const CertifiedValue z = zeta(o.s);
  const CertifiedValue dz = zeta_derivative(o.s);
  if (o.format_or(Format::csv) == Format::json) {
    write_json(out, Json{{"s", number(o.s)},
                         {"zeta", number(z.value)},
                         {"zeta_error", number(z.abs_error_bound)},
                         {"zeta_prime", number(dz.value)},
                         {"zeta_prime_error", number(dz.abs_error_bound)}});
    return;
  }
  out << "s,zeta,zeta_error,zeta_prime,zeta_prime_error\n"
      << format_real(o.s) << ',' << format_real(z.value) << ',' << format_real(z.abs_error_bound) << ','
      << format_real(dz.value) << ',' << format_real(dz.abs_error_bound) << '\n';
}

inline void write_table_file(const std::string& path, const RankFrequencyTable& table,
                             std::optional<std::size_t> top_k) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  write_csv(file, table, top_k);
  if (!file) throw IoError("write failed for '" + path + "'");
}

inline void cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const RankFrequencyTable table = count_file(o.path_a);
  if (table.empty()) throw DomainError("analyze: '" + o.path_a + "' contains no tokens");
  std::optional<std::size_t> top_k;
  if (o.top_k > 0) top_k = o.top_k;

  if (!o.table_path.empty()) write_table_file(o.table_path, table, top_k);
  if (o.format_or(Format::json) == Format::csv) {
    write_csv(out, table, top_k);
    return;
  }

  Json doc;
  doc["total_tokens"] = table.total_tokens();
  doc["distinct_types"] = table.distinct_types();
  doc["fit_min_count"] = o.min_count;
  try {
    const FitResult fit = fit_zipf(table, o.min_count);
    doc["s_hat"] = number(fit.s_hat);
    doc["c_hat"] = number(fit.c_hat);
    doc["r_squared"] = number(fit.r_squared);
    doc["fit_ranks"] = fit.max_rank;
  } catch (const InsufficientDataError& e) {
    err << "zipfent: warning[insufficient-data]: " << e.what() << '\n';
    doc["s_hat"] = nullptr;
    doc["c_hat"] = nullptr;
    doc["r_squared"] = nullptr;
    doc["fit_ranks"] = nullptr;
  }
  doc["empirical_entropy_bits"] = number(empirical_entropy(table));
  if (!o.no_smoothing) {
    const SmoothedDistribution dist = good_turing(table);
    doc["smoothed_entropy_bits"] = number(smoothed_entropy(dist, table, o.unseen_as_symbol));
    doc["p_unseen"] = number(dist.p_unseen_total);
    doc["smoothing_fallback"] = std::string(to_string(dist.fallback));
    if (dist.fallback != SmoothingFallback::none) {
      err << "zipfent: warning[smoothing-fallback]: " << to_string(dist.fallback)
          << ", plug-in probabilities used\n";
    }
  }
  write_json(out, doc);
}

inline void cmd_compare(const Options& o, std::ostream& out) {
  const RankFrequencyTable a = count_file(o.path_a);
  const RankFrequencyTable b = count_file(o.path_b);
  const auto cap = o.max_rank > 0 ? std::optional(o.max_rank) : std::nullopt;
  const DissimilarityReport report = zipf_dissimilarity(a, b, cap);
  if (o.format_or(Format::json) == Format::csv) {
    out << "value,shared_ranks,measure\n"
        << format_real(report.value) << ',' << report.shared_ranks << ',' << kDissimilarityMeasure << '\n';
    return;
  }
  write_json(out, Json{{"value", number(report.value)},
                       {"shared_ranks", report.shared_ranks},
                       {"measure", std::string(kDissimilarityMeasure)}});
}

inline void cmd_monkey(const Options& o, std::ostream& out) {
  const MonkeyConfig config{o.alphabet, o.space_probability, o.token_count, o.seed};
  const Format format = o.format_or(Format::csv);

  if (o.oracle) {
    const auto table = theoretical_table(config, o.max_length);
    if (format == Format::json) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < table.size(); ++i) {
        rows.push_back({{"rank", i + 1}, {"type", table[i].word}, {"probability", number(table[i].probability)}});
      }
      write_json(out, Json{{"rows", rows}});
      return;
    }
    out << "rank,type,probability\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      out << i + 1 << ',' << table[i].word << ',' << format_real(table[i].probability) << '\n';
    }
    return;
  }

  const std::vector<std::string> words = generate(config);
  if (o.emit_table) {
    write_csv(out, count(words));
    return;
  }
  if (format == Format::json) {
    write_json(out, Json(words));
    return;
  }
  for (const auto& w : words) out << w << '\n';
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropy of Zipf-distributed lexicons and rank-frequency analysis of corpora", "zipfent"};
  app.require_subcommand(1);
  app.fallthrough();

  detail::Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", o.output, "Write to PATH instead of standard output");

  auto* entropy = app.add_subcommand("entropy", "Exact entropy and Riemann-sum bounds for one (s, N)");
  entropy->add_option("--s", o.s, "Zipf exponent")->required();
  entropy->add_option("--n", o.n, "Lexicon size")->required();

  auto* surface = app.add_subcommand("surface", "Bound midpoint and gap over an (s, N) grid");
  surface->add_option("--s-min", o.s_min, "Smallest exponent")->required();
  surface->add_option("--s-max", o.s_max, "Largest exponent (default: s-min)");
  surface->add_option("--s-step", o.s_step, "Exponent step")->capture_default_str();
  surface->add_option("--n", o.n_list, "Lexicon sizes, comma separated")->delimiter(',')->required();

  auto* infinite = app.add_subcommand("infinite", "Infinite-lexicon entropy over an exponent range");
  infinite->add_option("--s-min", o.s_min, "Smallest exponent (> 1)")->required();
  infinite->add_option("--s-max", o.s_max, "Largest exponent (default: s-min)");
  infinite->add_option("--s-step", o.s_step, "Exponent step")->capture_default_str();
  infinite->add_option("--n", o.n, "Add a finite-lexicon column for this N");

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta(s), zeta'(s) and their error bounds");
  zeta_cmd->add_option("--s", o.s, "Argument (> 1)")->required();

  auto* analyze = app.add_subcommand("analyze", "Rank-frequency analysis of a text file");
  analyze->add_option("path", o.path_a, "Text file")->required();
  analyze->add_option("--min-count", o.min_count, "Smallest count used in the exponent fit")->capture_default_str();
  analyze->add_flag("--no-smoothing", o.no_smoothing, "Skip Good-Turing smoothing");
  analyze->add_flag("--unseen-as-symbol", o.unseen_as_symbol, "Count the unseen mass as one symbol");
  analyze->add_option("--top-k", o.top_k, "Emit only the K most frequent types in the table");
  analyze->add_option("--table", o.table_path, "Also write the rank-frequency CSV to PATH");

  auto* compare = app.add_subcommand("compare", "Dissimilarity of the Zipf plots of two text files");
  compare->add_option("path_a", o.path_a, "First text file")->required();
  compare->add_option("path_b", o.path_b, "Second text file")->required();
  compare->add_option("--max-rank", o.max_rank, "Compare at most this many ranks");

  auto* monkey = app.add_subcommand("monkey", "Random-typing text and its exact word distribution");
  monkey->add_option("--m", o.alphabet, "Alphabet size (1..26)")->capture_default_str();
  monkey->add_option("--q", o.space_probability, "Space probability")->capture_default_str();
  monkey->add_option("--count", o.token_count, "Number of words")->capture_default_str();
  monkey->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  monkey->add_flag("--table", o.emit_table, "Emit the rank-frequency CSV instead of the words");
  monkey->add_flag("--oracle", o.oracle, "Emit the exact word-probability table");
  monkey->add_option("--max-length", o.max_length, "Longest word in the exact table")->capture_default_str();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "zipfent: error[usage]: " << e.what() << '\n';
    return kUsage;
  }

  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.output.empty()) {
      file.open(o.output, std::ios::binary);
      if (!file) throw IoError("cannot write '" + o.output + "'");
      sink = &file;
    }

    if (entropy->parsed()) {
      detail::cmd_entropy(o, *sink);
    } else if (surface->parsed()) {
      detail::cmd_surface(o, *sink, err);
    } else if (infinite->parsed()) {
      detail::cmd_infinite(o, *sink);
    } else if (zeta_cmd->parsed()) {
      detail::cmd_zeta(o, *sink);
    } else if (analyze->parsed()) {
      detail::cmd_analyze(o, *sink, err);
    } else if (compare->parsed()) {
      detail::cmd_compare(o, *sink);
    } else if (monkey->parsed()) {
      detail::cmd_monkey(o, *sink);
    }

    sink->flush();
    if (!*sink) throw IoError("write failed");
  } catch (const IoError& e) {
    err << "zipfent: error[io]: " << e.what() << '\n';
    return kIo;
  } catch (const DivergenceError& e) {
    err << "zipfent: error[divergence]: " << e.what() << '\n';
    return kDomain;
  } catch (const DomainError& e) {
    err << "zipfent: error[domain]: " << e.what() << '\n';
    return kDomain;
  } catch (const InsufficientDataError& e) {
    err << "zipfent: error[insufficient-data]: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceError& e) {
    err << "zipfent: error[resource]: " << e.what() << '\n';
    return kDomain;
  }
  return kSuccess;
}

}  // namespace zipfent::cli
