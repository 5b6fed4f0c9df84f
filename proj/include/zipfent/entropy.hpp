#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "zipfent/compensated_sum.hpp"
#include "zipfent/error.hpp"
#include "zipfent/zipf.hpp"

namespace zipfent {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Lexicons up to this size get a direct-summation entropy next to the bracket.
inline constexpr std::uint64_t kExactEntropyLimit = 10'000'000;

// ---------------------------------------------------------------------------
// Direct evaluation
// ---------------------------------------------------------------------------

/// Shannon entropy in bits, -sum p_k log2 p_k, summed term by term.
inline double entropy_exact(const ZipfModel& model) {
  CompensatedSum<double> acc;
  for (Rank k = model.size(); k >= 1; --k) {
    const double p = model.probability_unchecked(k);
    if (p > 0.0) acc -= p * std::log2(p);
  }
  return std::max(acc.value(), 0.0);
}

/// ln k / k^s, the summand of the log-weighted sum.
inline double log_weight(double x, double s) { return std::log(x) * std::pow(x, -s); }

/// sum_{n=1..N} ln n / n^s by direct compensated summation.
inline double log_weighted_sum(std::uint64_t n, double s) {
  CompensatedSum<double> acc;
  for (std::uint64_t k = n; k >= 2; --k) acc += log_weight(static_cast<double>(k), s);
  return acc.value();
}

/// Entropy in bits from the log-weighted sum S = sum ln k / k^s:
/// H = (s C / ln 2) S - log2 C.
inline double entropy_from_log_sum(double s, double normalizer, double log_sum) {
  return s * normalizer / std::numbers::ln2 * log_sum - std::log2(normalizer);
}

// ---------------------------------------------------------------------------
// Riemann-sum bracket
// ---------------------------------------------------------------------------

/// e^{1/s}: f(x) = ln x / x^s is strictly decreasing for x beyond this point.
inline double decreasing_threshold(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("decreasing_threshold: s must be > 0 (f is eventually increasing otherwise)");
  }
  return std::exp(1.0 / s);
}

namespace detail {

// (e^z (z - 1) + 1) / z^2, evaluated without cancellation near z = 0.
inline double log_integral_kernel(double z) {
  if (std::abs(z) < 0.5) {
    // sum_{n>=2} (n-1) z^{n-2} / n!
    double term = 0.5;  // n = 2
    double sum = term;
    double power = 1.0;
    double factorial = 2.0;
    for (int n = 3; n <= 24; ++n) {
      power *= z;
      factorial *= n;
      term = (n - 1) * power / factorial;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (z * std::exp(z) - std::expm1(z)) / (z * z);
}

}  // namespace detail

/// Integral of ln x / x^s over [a, b]; `b` may be `kInfinity` when s > 1.
///
/// The antiderivative x^{1-s}/(1-s) (ln x - 1/(1-s)) is evaluated in u = ln x
/// as u^2 psi((1-s) u), which never cancels and equals (ln x)^2 / 2 at s = 1.
inline double log_integral(double a, double b, double s) {
  if (!std::isfinite(s)) throw DomainError("log_integral: s must be finite");
  if (!(a > 0.0) || std::isinf(a)) throw DomainError("log_integral: lower limit must be finite and > 0");
  if (std::isnan(b) || b < a) throw DomainError("log_integral: requires a <= b");

  if (std::isinf(b)) {
    if (s <= 1.0) throw DivergenceError("log_integral: infinite upper limit diverges for s <= 1");
    const double sm1 = s - 1.0;
    return std::pow(a, -sm1) / sm1 * (std::log(a) + 1.0 / sm1);
  }
  if (a == b) return 0.0;

  const double ua = std::log(a);
  const double ub = std::log(b);
  const double t = 1.0 - s;
  return ub * ub * detail::log_integral_kernel(t * ub) - ua * ua * detail::log_integral_kernel(t * ua);
}

/// Bracket on sum_{n=1..N} ln n / n^s.
struct LogSumBounds {
  double lower = 0.0;
  double upper = 0.0;
  /// Leading terms summed exactly before the integral bracket takes over.
  std::uint64_t head_terms = 0;
  /// True when N was small enough that the whole sum was evaluated directly.
  bool exact = false;
};

/// First index of the integral bracket: 3 for s >= 1, otherwise the first
/// integer past e^{1/s}.
inline std::uint64_t bracket_start(double s) {
  if (s >= 1.0) return 3;
  const double threshold = decreasing_threshold(s);
  if (!(threshold < 0x1.0p62)) return std::numeric_limits<std::uint64_t>::max() / 2;
  return std::max<std::uint64_t>(3, static_cast<std::uint64_t>(std::floor(threshold)) + 1);
}

/// Sandwich the log-weighted sum between left and right Riemann sums of
/// f(x) = ln x / x^s:
///
///   head + int_{k0}^{N} f  <=  sum  <=  head + f(k0) + int_{k0}^{N} f
///
/// where head = sum_{n < k0} f(n) is exact and f decreases on [k0, inf).
inline LogSumBounds log_weighted_sum_bounds(std::uint64_t n, double s) {
  if (n < 1) throw DomainError("log_weighted_sum_bounds: N must be >= 1");
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("log_weighted_sum_bounds: s must be > 0");

  const std::uint64_t k0 = bracket_start(s);
  if (n <= k0 + 1) {
    const double sum = log_weighted_sum(n, s);
    return {sum, sum, n, true};
  }

  const double head = log_weighted_sum(k0 - 1, s);
  const double start = static_cast<double>(k0);
  const double end = static_cast<double>(n);
  LogSumBounds bounds;
  bounds.lower = head + log_integral(start, end, s);
  bounds.upper = head + log_weight(start, s) + log_integral(start, end, s);
  bounds.head_terms = k0 - 1;
  return bounds;
}

enum class BoundMethod { exact_sum, riemann_bracket };

inline std::string_view to_string(BoundMethod method) {
  return method == BoundMethod::exact_sum ? "exact-sum" : "riemann-bracket";
}

/// Entropy bracket in bits.
struct EntropyBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> exact;
  BoundMethod method = BoundMethod::exact_sum;
  std::uint64_t head_terms = 0;

  [[nodiscard]] double gap() const { return upper - lower; }
  [[nodiscard]] double midpoint() const { return 0.5 * (lower + upper); }
};

/// Entropy bounds from the log-weighted-sum bracket and the exact normalizer.
/// The direct entropy is attached when N <= `exact_limit`.
inline EntropyBounds entropy_bounds(const ZipfModel& model,
                                    std::uint64_t exact_limit = kExactEntropyLimit) {
  const double s = model.exponent();
  if (!(s > 0.0)) throw DomainError("entropy_bounds: s must be > 0 (use entropy_exact for s <= 0)");

  const LogSumBounds sum = log_weighted_sum_bounds(model.size(), s);
  const double c = model.normalizer();

  EntropyBounds out;
  // s C / ln 2 > 0, so the orientation of the bracket carries over.
  out.lower = entropy_from_log_sum(s, c, sum.lower);
  out.upper = sum.exact ? out.lower : entropy_from_log_sum(s, c, sum.upper);
  out.method = sum.exact ? BoundMethod::exact_sum : BoundMethod::riemann_bracket;
  out.head_terms = sum.head_terms;
  if (model.size() <= exact_limit) out.exact = entropy_exact(model);
  return out;
}

// ---------------------------------------------------------------------------
// Infinite lexicon
// ---------------------------------------------------------------------------

/// A value together with a certified bound on its absolute error.
struct CertifiedValue {
  double value = 0.0;
  double abs_error_bound = 0.0;
};

/// zeta(s) and zeta'(s) at one argument.
struct ZetaValue {
  double s = 0.0;
  double zeta = 0.0;
  double zeta_prime = 0.0;
  double abs_error_bound = 0.0;
};

/// Direct-summation cutoff for the Euler-Maclaurin evaluations.
inline constexpr std::uint64_t kZetaCutoff = 10'000;

namespace detail {

// Euler-Maclaurin for sum_{n>=1} g(n) with g(x) = x^{-s} (a0 ln x + b0).
// Derivatives keep the shape x^{-s-k} (a_k ln x + b_k) with
//   a_{k+1} = -(s+k) a_k,   b_{k+1} = -(s+k) b_k + a_k.
inline CertifiedValue euler_maclaurin(double s, double a0, double b0, double tail_integral) {
  const auto m = kZetaCutoff;
  const double xm = static_cast<double>(m);
  const double log_m = std::log(xm);

  CompensatedSum<double> acc;
  double magnitude = 0.0;
  for (std::uint64_t n = m - 1; n >= 1; --n) {
    const double x = static_cast<double>(n);
    const double term = std::pow(x, -s) * (a0 * std::log(x) + b0);
    acc += term;
    magnitude += std::abs(term);
  }

  double derivative[6];
  double a = a0;
  double b = b0;
  for (int k = 0; k < 6; ++k) {
    derivative[k] = std::pow(xm, -s - k) * (a * log_m + b);
    const double next_a = -(s + k) * a;
    b = -(s + k) * b + a;
    a = next_a;
  }

  // B2/2! = 1/12, B4/4! = -1/720, B6/6! = 1/30240.
  const double corrections[] = {
      tail_integral,
      0.5 * derivative[0],
      -derivative[1] / 12.0,
      derivative[3] / 720.0,
  };
  for (double c : corrections) {
    acc += c;
    magnitude += std::abs(c);
  }

  const double remainder = std::abs(derivative[5]) / 30240.0;
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * magnitude;
  return {acc.value(), remainder + rounding};
}

}  // namespace detail

/// Riemann zeta for real s > 1.
inline CertifiedValue zeta(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) throw DivergenceError("zeta: requires real s > 1");
  const double xm = static_cast<double>(kZetaCutoff);
  return detail::euler_maclaurin(s, 0.0, 1.0, std::pow(xm, 1.0 - s) / (s - 1.0));
}

/// zeta'(s) = -sum ln k / k^s for real s > 1.
inline CertifiedValue zeta_derivative(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) throw DivergenceError("zeta_derivative: requires real s > 1");
  const double xm = static_cast<double>(kZetaCutoff);
  CertifiedValue sum = detail::euler_maclaurin(s, 1.0, 0.0, log_integral(xm, kInfinity, s));
  sum.value = -sum.value;
  return sum;
}

inline ZetaValue zeta_value(double s) {
  const CertifiedValue z = zeta(s);
  const CertifiedValue dz = zeta_derivative(s);
  return {s, z.value, dz.value, std::max(z.abs_error_bound, dz.abs_error_bound)};
}

/// Entropy in bits of the infinite-lexicon Zipf distribution p_k = k^{-s} / zeta(s).
inline double entropy_infinite(double s) {
  if (!(s > 1.0)) {
    throw DivergenceError("entropy_infinite: the infinite lexicon is normalizable only for s > 1");
  }
  const ZetaValue z = zeta_value(s);
  return std::log2(z.zeta) + s / std::numbers::ln2 * (-z.zeta_prime) / z.zeta;
}

// ---------------------------------------------------------------------------
// Surfaces
// ---------------------------------------------------------------------------

/// One cell of an H(s, N) grid. On a domain error `error` is set and the
/// numeric fields are NaN.
struct SurfacePoint {
  double s = 0.0;
  std::uint64_t n = 0;
  double h_mid = std::numeric_limits<double>::quiet_NaN();
  double h_gap = std::numeric_limits<double>::quiet_NaN();
  std::optional<std::string> error;

  [[nodiscard]] bool ok() const { return !error.has_value(); }
};

namespace detail {

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

inline SurfacePoint surface_point(double s, std::uint64_t n) {
  SurfacePoint point;
  point.s = s;
  point.n = n;
  try {
    if (!(s > 0.0)) throw DomainError("s must be > 0");
    const EntropyBounds bounds = entropy_bounds(ZipfModel(s, n), 0);
    point.h_mid = bounds.midpoint();
    point.h_gap = bounds.gap();
  } catch (const DomainError& e) {
    point.error = e.what();
  }
  return point;
}

/// H(s, N) midpoint and bracket width over a grid, N-major then s.
inline std::vector<SurfacePoint> entropy_surface(std::span<const double> s_grid,
                                                 std::span<const std::uint64_t> n_grid) {
  if (s_grid.empty() || n_grid.empty()) throw DomainError("entropy_surface: grids must be non-empty");
  std::vector<SurfacePoint> points(s_grid.size() * n_grid.size());
  detail::parallel_for(points.size(), [&](std::size_t index) {
    const std::size_t n_index = index / s_grid.size();
    const std::size_t s_index = index % s_grid.size();
    points[index] = surface_point(s_grid[s_index], n_grid[n_index]);
  });
  return points;
}

}  // namespace zipfent
