#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

namespace zipfent {

/// Significant digits used for every real number written to CSV or JSON.
inline constexpr int kOutputDigits = 12;

/// Shortest "%.12g" rendering; empty for NaN so CSV cells read as missing.
inline std::string format_real(double value) {
  if (std::isnan(value)) return {};
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.*g", kOutputDigits, value);
  return buffer;
}

/// `value` rounded to `kOutputDigits` significant digits.
inline double round_significant(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_real(value).c_str(), nullptr);
}

/// RFC 4180 quoting, applied only when the field needs it.
inline std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace zipfent
