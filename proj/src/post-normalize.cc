// src/post-normalize.cc

// Copyright 2026 The ttskit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ttskit/post-normalize.h"

#include <array>
#include <fstream>

#include "ttskit/lexicon.h"
#include "ttskit/num-words.h"
#include "ttskit/util.h"

namespace ttskit {

namespace {

bool IsStripChar(char c) {
  return c == '-' || c == '_' || c == '(' || c == ')' || c == '[' || c == ']';
}

bool IsAsciiPeel(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case '"': case '\'': case '%': case '$': case '#': case '&':
    case '*': case '+': case '/': case '<': case '>': case '=':
    case '@': case '^': case '`': case '{': case '}': case '|':
    case '~':
      return true;
    default:
      return false;
  }
}

// Multibyte punctuation that may wrap a token (Spanish inverted marks,
// curly quotes, guillemets, ellipsis, pound/euro signs).
const std::array<const char *, 12> kWidePeel = {
    "¿", "¡", "«", "»", "“", "”",
    "‘", "’", "…", "£", "€", "°"};

size_t LeadingPeelLen(std::string_view s) {
  if (s.empty()) return 0;
  if (IsAsciiPeel(s[0])) return 1;
  for (const char *p : kWidePeel) {
    std::string_view w(p);
    if (s.substr(0, w.size()) == w) return w.size();
  }
  return 0;
}

size_t TrailingPeelLen(std::string_view s) {
  if (s.empty()) return 0;
  if (IsAsciiPeel(s.back())) return 1;
  for (const char *p : kWidePeel) {
    std::string_view w(p);
    if (s.size() >= w.size() && s.substr(s.size() - w.size()) == w) {
      return w.size();
    }
  }
  return 0;
}

bool IsAcronym(std::string_view core, const PostNormConfig &cfg) {
  if (core.size() < cfg.acronym_min_len || core.size() > cfg.acronym_max_len) {
    return false;
  }
  for (char c : core) {
    if (!IsAsciiUpper(c)) return false;
  }
  return cfg.acronym_whitelist.find(std::string(core)) ==
         cfg.acronym_whitelist.end();
}

std::string SpellAcronym(std::string_view core) {
  std::string out;
  for (size_t i = 0; i < core.size(); ++i) {
    if (i) out += ' ';
    out += core[i];
  }
  return out;
}

std::string NumberToWords(const FormattedNumber &num, Locale loc) {
  if (num.frac_digits.empty()) return CardinalWords(num.int_part, loc);
  DecimalSeparator sep = (num.decimal_sep == '.') ? DecimalSeparator::kPoint
                                                  : DecimalSeparator::kComma;
  return DecimalWords(num.int_part, num.frac_digits, loc, sep);
}

std::string ProcessToken(std::string_view token, const PostNormConfig &cfg);

std::string ConvertToken(std::string_view core, const PostNormConfig &cfg) {
  bool has_digit = false;
  for (char c : core) has_digit |= IsAsciiDigit(c);

  if (has_digit) {
    FormattedNumber num;
    // Leading zeros carry information ("007"), keep them digit by digit.
    bool leading_zero = core.size() > 1 && core[0] == '0';
    if (!leading_zero && ParseFormattedNumber(core, &num)) {
      return NumberToWords(num, cfg.locale);
    }
    // Unrecognized shape ("13:59", "13h45"): spell each digit run and
    // re-process the fragments in between so nothing survives a pass.
    std::string out;
    size_t i = 0;
    while (i < core.size()) {
      size_t b = i;
      bool digits = IsAsciiDigit(core[i]);
      while (i < core.size() && IsAsciiDigit(core[i]) == digits) ++i;
      if (!out.empty()) out += ' ';
      out += digits ? DigitWords(core.substr(b, i - b), cfg.locale)
                    : ProcessToken(core.substr(b, i - b), cfg);
    }
    return out;
  }
  if (IsAcronym(core, cfg)) return SpellAcronym(core);
  return std::string(core);
}

// Peels wrapping punctuation, converts the core, and reattaches the
// punctuation. Fragments produced inside ConvertToken go through this too,
// so a single pass reaches the same fixpoint later passes would.
std::string ProcessToken(std::string_view token, const PostNormConfig &cfg) {
  std::string_view tv = token;
  std::string lead, tail;
  for (size_t n = LeadingPeelLen(tv); n; n = LeadingPeelLen(tv)) {
    lead += tv.substr(0, n);
    tv.remove_prefix(n);
  }
  for (size_t n = TrailingPeelLen(tv); n; n = TrailingPeelLen(tv)) {
    tail.insert(0, std::string(tv.substr(tv.size() - n)));
    tv.remove_suffix(n);
  }
  std::string out = lead;
  if (!tv.empty()) out += ConvertToken(tv, cfg);
  out += tail;
  return out;
}

}  // namespace

PostNormConfig PostNormConfig::ForLocale(Locale loc) {
  PostNormConfig cfg;
  cfg.locale = loc;
  cfg.acronym_whitelist = Lexicons::Default().acronym_whitelist;
  return cfg;
}

std::string PostNormalize(std::string_view text, const PostNormConfig &cfg) {
  // Decide up front whether the result should start with a capital: the
  // first alphanumeric character of the input being an uppercase letter or
  // a digit (digits verbalize to lowercase words). Leading punctuation,
  // including multibyte marks like the inverted question mark, is skipped.
  bool capitalize = false;
  for (size_t i = 0; i < text.size();) {
    unsigned char u = static_cast<unsigned char>(text[i]);
    if (IsAsciiAlpha(text[i]) || IsAsciiDigit(text[i])) {
      capitalize = IsAsciiUpper(text[i]) || IsAsciiDigit(text[i]);
      break;
    }
    if (u < 0x80) {
      ++i;
    } else if (u == 0xC2) {
      i += 2;
    } else if (u == 0xE2) {
      i += 3;
    } else {
      break;  // multibyte letter: keep its casing
    }
  }

  std::string stripped;
  stripped.reserve(text.size());
  for (char c : text) stripped += IsStripChar(c) ? ' ' : c;

  std::string out;
  for (const auto &token : SplitWhitespace(stripped)) {
    if (!out.empty()) out += ' ';
    out += ProcessToken(token, cfg);
  }
  out = CollapseWhitespace(out);

  if (capitalize) {
    size_t i = 0;
    while (i < out.size()) {
      unsigned char u = static_cast<unsigned char>(out[i]);
      if (IsAsciiLower(out[i])) {
        out[i] = static_cast<char>(out[i] - 'a' + 'A');
        break;
      }
      if (IsAsciiUpper(out[i])) break;
      if (u < 0x80) {          // ASCII punctuation / space: keep scanning
        ++i;
      } else if (u == 0xC2) {  // Latin-1 punctuation (inverted marks etc.)
        i += 2;
      } else if (u == 0xE2) {  // general punctuation block (quotes, ellipsis)
        i += 3;
      } else {
        break;                 // multibyte letter: already cased
      }
    }
  }
  return out;
}

}  // namespace ttskit
