#include "geolex/tokenizer.hpp"

#include <cstdint>

namespace geolex {

namespace {

struct Range {
  char32_t lo;
  char32_t hi;
};

// Letter ranges for the common BMP scripts. Approximates the Unicode L*
// categories; code points outside the table split tokens.
constexpr Range kLetterRanges[] = {
    {U'a', U'z'},
    {U'A', U'Z'},
    {0x00AA, 0x00AA},  // feminine ordinal
    {0x00B5, 0x00B5},  // micro sign
    {0x00BA, 0x00BA},  // masculine ordinal
    {0x00C0, 0x00D6},  // Latin-1 letters (excluding multiplication sign)
    {0x00D8, 0x00F6},
    {0x00F8, 0x02FF},  // Latin Extended A/B, IPA
    {0x0370, 0x037D},  // Greek (0x37E is the Greek question mark)
    {0x037F, 0x0386},
    {0x0388, 0x03FF},
    {0x0400, 0x052F},  // Cyrillic + supplement
    {0x0531, 0x0588},  // Armenian
    {0x05D0, 0x05EA},  // Hebrew
    {0x0620, 0x064A},  // Arabic
    {0x066E, 0x06D3},
    {0x0900, 0x0965},  // Devanagari (digits handled below)
    {0x0970, 0x097F},
    {0x0E01, 0x0E4F},  // Thai
    {0x1E00, 0x1FFF},  // Latin Extended Additional, Greek Extended
    {0x3041, 0x30FF},  // Hiragana, Katakana
    {0x4E00, 0x9FFF},  // CJK unified
    {0xAC00, 0xD7A3},  // Hangul
};

constexpr Range kDigitRanges[] = {
    {U'0', U'9'},      {0x0660, 0x0669},  // Arabic-Indic
    {0x06F0, 0x06F9},  // Extended Arabic-Indic
    {0x0966, 0x096F},  // Devanagari
    {0x0E50, 0x0E59},  // Thai
    {0xFF10, 0xFF19},  // Fullwidth
};

bool in_ranges(char32_t cp, const Range* ranges, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (cp >= ranges[i].lo && cp <= ranges[i].hi) return true;
  }
  return false;
}

bool is_digit_cp(char32_t cp) {
  return in_ranges(cp, kDigitRanges, std::size(kDigitRanges));
}

bool is_letter_cp(char32_t cp) {
  return in_ranges(cp, kLetterRanges, std::size(kLetterRanges));
}

char32_t to_lower_cp(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;  // Greek
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;  // Cyrillic
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  // Latin Extended-A upper/lower pairs alternate, with the parity flipping
  // inside the block.
  if ((cp >= 0x0100 && cp <= 0x0137) || (cp >= 0x014A && cp <= 0x0177)) {
    if ((cp % 2) == 0) return cp + 1;
  } else if ((cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E)) {
    if ((cp % 2) == 1) return cp + 1;
  }
  return cp;
}

// Decodes one UTF-8 code point starting at i; advances i. Malformed bytes
// yield U+FFFD (a separator) and advance by one byte.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) -> std::uint32_t {
    return static_cast<unsigned char>(s[k]);
  };
  const std::uint32_t b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int extra;
  std::uint32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + extra >= s.size()) {
    // Truncated sequence.
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k <= extra; ++k) {
    const std::uint32_t bk = byte(i + k);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += 1 + extra;
  return cp;
}

void append_utf8(std::u32string& out, char32_t cp) { out.push_back(cp); }

std::string encode_utf8(const std::u32string& s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
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
  return out;
}

bool keep_token(const std::u32string& tok) {
  if (tok.size() < 2) return false;
  bool all_digits = true;
  for (char32_t cp : tok) {
    if (!is_digit_cp(cp)) {
      all_digits = false;
      break;
    }
  }
  if (all_digits) return false;
  if (tok.size() >= 4 && tok.compare(0, 4, U"http") == 0) return false;
  return true;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::u32string cur;
  std::size_t i = 0;
  const auto flush = [&] {
    if (keep_token(cur)) tokens.push_back(encode_utf8(cur));
    cur.clear();
  };
  while (i < text.size()) {
    const char32_t cp = decode_utf8(text, i);
    if (is_letter_cp(cp) || is_digit_cp(cp)) {
      append_utf8(cur, to_lower_cp(cp));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

}  // namespace geolex
