#pragma once

// Word tokenizer for plain UTF-8 text.
//
// A token is a maximal run of letters, lowercased. Combining marks attached
// to a letter and apostrophes (U+0027, U+2019) between two letters stay in the
// word; everything else (digits, punctuation, whitespace, symbols, malformed
// bytes) separates words. Case folding covers Latin, Greek, Cyrillic and
// Armenian; other scripts are kept as written. No locale is consulted, so the
// same bytes always produce the same tokens.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zipfent {

namespace unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

struct Range {
  char32_t first;
  char32_t last;
};

inline constexpr Range kLetterRanges[] = {
    {0x0041, 0x005A}, {0x0061, 0x007A}, {0x00AA, 0x00AA}, {0x00B5, 0x00B5},
    {0x00BA, 0x00BA}, {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x02AF},
    {0x02B0, 0x02C1}, {0x02C6, 0x02D1}, {0x0370, 0x0373}, {0x0376, 0x0377},
    {0x037B, 0x037D}, {0x037F, 0x037F}, {0x0386, 0x0386}, {0x0388, 0x038A},
    {0x038C, 0x038C}, {0x038E, 0x03A1}, {0x03A3, 0x03F5}, {0x03F7, 0x0481},
    {0x048A, 0x052F}, {0x0531, 0x0556}, {0x0561, 0x0587}, {0x05D0, 0x05EA},
    {0x0620, 0x064A}, {0x0671, 0x06D3}, {0x0904, 0x0939}, {0x093D, 0x093D},
    {0x0950, 0x0950}, {0x0958, 0x0961}, {0x0971, 0x097F}, {0x0E01, 0x0E30},
    {0x0E32, 0x0E33}, {0x0E40, 0x0E46}, {0x10A0, 0x10FF}, {0x1100, 0x11FF},
    {0x1E00, 0x1FBC}, {0x3041, 0x3096}, {0x309D, 0x309F}, {0x30A1, 0x30FA},
    {0x30FC, 0x30FF}, {0x3400, 0x4DBF}, {0x4E00, 0x9FFF}, {0xAC00, 0xD7A3},
    {0xF900, 0xFAFF}, {0xFF21, 0xFF3A}, {0xFF41, 0xFF5A}, {0x20000, 0x2FA1F},
};

inline constexpr Range kMarkRanges[] = {
    {0x0300, 0x036F}, {0x0483, 0x0489}, {0x0591, 0x05C7}, {0x0610, 0x061A},
    {0x064B, 0x065F}, {0x0900, 0x0903}, {0x093A, 0x094F}, {0x0951, 0x0957},
    {0x0962, 0x0963}, {0x0E31, 0x0E31}, {0x0E34, 0x0E3A}, {0x0E47, 0x0E4E},
    {0x1AB0, 0x1AFF}, {0x1DC0, 0x1DFF}, {0x20D0, 0x20FF}, {0xFE20, 0xFE2F},
};

template <std::size_t Size>
constexpr bool in_ranges(const Range (&ranges)[Size], char32_t cp) {
  // Tables are short and sorted; a linear scan with early exit is enough.
  for (const Range& r : ranges) {
    if (cp < r.first) return false;
    if (cp <= r.last) return true;
  }
  return false;
}

constexpr bool is_letter(char32_t cp) {
  if (cp < 0x80) return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  return in_ranges(kLetterRanges, cp);
}

constexpr bool is_mark(char32_t cp) { return cp >= 0x300 && in_ranges(kMarkRanges, cp); }

constexpr bool is_apostrophe(char32_t cp) { return cp == 0x27 || cp == 0x2019; }

constexpr bool even(char32_t cp) { return cp % 2 == 0; }

/// Simple (one-to-one) lowercase mapping.
constexpr char32_t to_lower(char32_t cp) {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp == 0x130) return 'i';
  if (cp == 0x178) return 0xFF;
  if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177)) return even(cp) ? cp + 1 : cp;
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) return even(cp) ? cp : cp + 1;
  if (cp == 0x386) return 0x3AC;
  if (cp >= 0x388 && cp <= 0x38A) return cp + 0x25;
  if (cp == 0x38C) return 0x3CC;
  if (cp == 0x38E || cp == 0x38F) return cp + 0x3F;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if ((cp >= 0x460 && cp <= 0x481) || (cp >= 0x48A && cp <= 0x4BF) || (cp >= 0x4D0 && cp <= 0x52F)) {
    return even(cp) ? cp + 1 : cp;
  }
  if (cp >= 0x531 && cp <= 0x556) return cp + 0x30;
  if ((cp >= 0x1E00 && cp <= 0x1E95) || (cp >= 0x1EA0 && cp <= 0x1EFF)) return even(cp) ? cp + 1 : cp;
  if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 0x20;
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

/// Incremental UTF-8 decoder. Malformed input becomes U+FFFD; a sequence
/// split across calls to `push` is reassembled.
class Utf8Decoder {
 public:
  template <typename Sink>
  void push(unsigned char byte, Sink&& sink) {
    if (pending_ > 0) {
      if ((byte & 0xC0) == 0x80) {
        code_point_ = (code_point_ << 6) | (byte & 0x3F);
        if (--pending_ == 0) {
          const bool valid = code_point_ >= minimum_ && code_point_ <= 0x10FFFF &&
                             !(code_point_ >= 0xD800 && code_point_ <= 0xDFFF);
          sink(valid ? code_point_ : kReplacement);
        }
        return;
      }
      pending_ = 0;
      sink(kReplacement);
    }
    if (byte < 0x80) {
      sink(static_cast<char32_t>(byte));
    } else if (byte >= 0xC2 && byte <= 0xDF) {
      start(byte & 0x1F, 1, 0x80);
    } else if (byte >= 0xE0 && byte <= 0xEF) {
      start(byte & 0x0F, 2, 0x800);
    } else if (byte >= 0xF0 && byte <= 0xF4) {
      start(byte & 0x07, 3, 0x10000);
    } else {
      sink(kReplacement);
    }
  }

  template <typename Sink>
  void finish(Sink&& sink) {
    if (pending_ > 0) {
      pending_ = 0;
      sink(kReplacement);
    }
  }

 private:
  void start(char32_t bits, int continuation, char32_t minimum) {
    code_point_ = bits;
    pending_ = continuation;
    minimum_ = minimum;
  }

  char32_t code_point_ = 0;
  char32_t minimum_ = 0;
  int pending_ = 0;
};

}  // namespace unicode

/// Streaming word tokenizer; feed arbitrary chunks, then call `finish`.
class Tokenizer {
 public:
  template <typename Emit>
  void feed(std::string_view bytes, Emit&& emit) {
    for (const char c : bytes) {
      decoder_.push(static_cast<unsigned char>(c), [&](char32_t cp) { accept(cp, emit); });
    }
  }

  template <typename Emit>
  void finish(Emit&& emit) {
    decoder_.finish([&](char32_t cp) { accept(cp, emit); });
    flush(emit);
  }

 private:
  template <typename Emit>
  void accept(char32_t cp, Emit& emit) {
    if (unicode::is_letter(cp)) {
      if (apostrophe_pending_) {
        word_.push_back('\'');
        apostrophe_pending_ = false;
      }
      unicode::append_utf8(word_, unicode::to_lower(cp));
    } else if (unicode::is_mark(cp) && !word_.empty() && !apostrophe_pending_) {
      unicode::append_utf8(word_, cp);
    } else if (unicode::is_apostrophe(cp) && !word_.empty() && !apostrophe_pending_) {
      apostrophe_pending_ = true;
    } else {
      flush(emit);
    }
  }

  template <typename Emit>
  void flush(Emit& emit) {
    apostrophe_pending_ = false;
    if (word_.empty()) return;
    emit(std::string_view(word_));
    word_.clear();
  }

  unicode::Utf8Decoder decoder_;
  std::string word_;
  bool apostrophe_pending_ = false;
};

inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  auto emit = [&](std::string_view token) { tokens.emplace_back(token); };
  Tokenizer tokenizer;
  tokenizer.feed(text, emit);
  tokenizer.finish(emit);
  return tokens;
}

}  // namespace zipfent
