// src/num-words.cc

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

#include "ttskit/num-words.h"

#include <array>
#include <vector>

#include "ttskit/util.h"

namespace ttskit {

namespace {

constexpr uint64_t kCardinalLimit = 1000000000000ULL;  // 10^12

// ---------------------------------------------------------------- English

const char *kEnUnits[] = {"zero",    "one",     "two",       "three",
                          "four",    "five",    "six",       "seven",
                          "eight",   "nine",    "ten",       "eleven",
                          "twelve",  "thirteen", "fourteen", "fifteen",
                          "sixteen", "seventeen", "eighteen", "nineteen"};
const char *kEnTens[] = {"",      "",      "twenty",  "thirty", "forty",
                         "fifty", "sixty", "seventy", "eighty", "ninety"};

std::string EnSub100(uint32_t n) {
  if (n < 20) return kEnUnits[n];
  std::string out = kEnTens[n / 10];
  if (n % 10) out += std::string(" ") + kEnUnits[n % 10];
  return out;
}

std::string EnGroup(uint32_t n) {
  std::string out;
  uint32_t h = n / 100, r = n % 100;
  if (h) {
    out = std::string(kEnUnits[h]) + " hundred";
    if (r) out += kEnglishHundredAnd ? " and " : " ";
  }
  if (r || !h) out += EnSub100(r);
  return out;
}

std::string EnCardinal(uint64_t n) {
  if (n == 0) return "zero";
  static const char *kScales[] = {"", "thousand", "million", "billion"};
  std::array<uint32_t, 4> groups{};
  int count = 0;
  while (n > 0) {
    groups[count++] = static_cast<uint32_t>(n % 1000);
    n /= 1000;
  }
  std::string out;
  for (int i = count - 1; i >= 0; --i) {
    if (!groups[i]) continue;
    if (!out.empty()) out += " ";
    out += EnGroup(groups[i]);
    if (i) out += std::string(" ") + kScales[i];
  }
  return out;
}

// ---------------------------------------------------------------- Spanish

const char *kEsUnits[] = {"cero", "uno",  "dos",  "tres", "cuatro",
                          "cinco", "seis", "siete", "ocho", "nueve"};
const char *kEsTeens[] = {"diez",      "once",       "doce",      "trece",
                          "catorce",   "quince",     "dieciséis", "diecisiete",
                          "dieciocho", "diecinueve"};
const char *kEsTwenties[] = {"veinte",       "veintiuno",  "veintidós",
                             "veintitrés",   "veinticuatro", "veinticinco",
                             "veintiséis",   "veintisiete", "veintiocho",
                             "veintinueve"};
const char *kEsTens[] = {"",        "",        "",        "treinta",
                         "cuarenta", "cincuenta", "sesenta", "setenta",
                         "ochenta", "noventa"};
const char *kEsHundreds[] = {"",           "ciento",      "doscientos",
                             "trescientos", "cuatrocientos", "quinientos",
                             "seiscientos", "setecientos", "ochocientos",
                             "novecientos"};

std::string EsOne(const CardinalOptions &opts) {
  if (opts.gender == Gender::kFeminine) return "una";
  return opts.apocope ? "un" : "uno";
}

std::string EsSub100(uint32_t n, const CardinalOptions &opts) {
  if (n == 1) return EsOne(opts);
  if (n < 10) return kEsUnits[n];
  if (n < 20) return kEsTeens[n - 10];
  if (n == 21) {
    if (opts.gender == Gender::kFeminine) return "veintiuna";
    return opts.apocope ? "veintiún" : "veintiuno";
  }
  if (n < 30) return kEsTwenties[n - 20];
  std::string out = kEsTens[n / 10];
  if (n % 10) out += " y " + EsSub100(n % 10, opts);
  return out;
}

std::string EsSub1000(uint32_t n, const CardinalOptions &opts) {
  if (n == 100) return "cien";
  std::string out;
  uint32_t h = n / 100, r = n % 100;
  if (h) {
    out = kEsHundreds[h];
    if (r) out += " ";
  }
  if (r) out += EsSub100(r, opts);
  return out;
}

// n in [1, 10^6): thousands block. Multipliers of "mil" always apocopate.
std::string EsSub1M(uint32_t n, const CardinalOptions &opts) {
  std::string out;
  uint32_t th = n / 1000, rem = n % 1000;
  if (th) {
    if (th == 1) {
      out = "mil";
    } else {
      CardinalOptions mult = opts;
      mult.apocope = true;
      mult.gender = Gender::kMasculine;
      out = EsSub1000(th, mult) + " mil";
    }
    if (rem) out += " ";
  }
  if (rem) out += EsSub1000(rem, opts);
  return out;
}

std::string EsCardinal(uint64_t n, const CardinalOptions &opts) {
  if (n == 0) return "cero";
  std::string out;
  uint64_t millions = n / 1000000, rest = n % 1000000;
  if (millions) {
    if (millions == 1) {
      out = "un millón";
    } else {
      CardinalOptions mult = opts;
      mult.apocope = true;
      mult.gender = Gender::kMasculine;
      out = EsSub1M(static_cast<uint32_t>(millions), mult) + " millones";
    }
    if (rest) out += " ";
  }
  if (rest) out += EsSub1M(static_cast<uint32_t>(rest), opts);
  return out;
}

// ---------------------------------------------------------------- Ordinals

std::string EnOrdinalizeWord(const std::string &w) {
  if (w == "one") return "first";
  if (w == "two") return "second";
  if (w == "three") return "third";
  if (w == "five") return "fifth";
  if (w == "eight") return "eighth";
  if (w == "nine") return "ninth";
  if (w == "twelve") return "twelfth";
  if (w.size() >= 2 && w.substr(w.size() - 2) == "ty") {
    return w.substr(0, w.size() - 1) + "ieth";
  }
  return w + "th";
}

const char *kEsOrdUnits[] = {"",       "primero", "segundo", "tercero",
                             "cuarto", "quinto",  "sexto",   "séptimo",
                             "octavo", "noveno"};
const char *kEsOrdTeens[] = {"décimo",        "undécimo",      "duodécimo",
                             "decimotercero", "decimocuarto",  "decimoquinto",
                             "decimosexto",   "decimoséptimo", "decimoctavo",
                             "decimonoveno"};
const char *kEsOrdTens[] = {"",            "",             "vigésimo",
                            "trigésimo",   "cuadragésimo", "quincuagésimo",
                            "sexagésimo",  "septuagésimo", "octogésimo",
                            "nonagésimo"};
const char *kEsOrdHundreds[] = {"",
                                "centésimo",
                                "ducentésimo",
                                "tricentésimo",
                                "cuadringentésimo",
                                "quingentésimo",
                                "sexcentésimo",
                                "septingentésimo",
                                "octingentésimo",
                                "noningentésimo"};

std::string EsOrdinal(uint32_t n, Gender gender) {
  std::vector<std::string> words;
  if (n == 1000) {
    words.push_back("milésimo");
  } else {
    uint32_t h = n / 100, r = n % 100;
    if (h) words.push_back(kEsOrdHundreds[h]);
    if (r) {
      if (r < 10) {
        words.push_back(kEsOrdUnits[r]);
      } else if (r < 20) {
        words.push_back(kEsOrdTeens[r - 10]);
      } else {
        words.push_back(kEsOrdTens[r / 10]);
        if (r % 10) words.push_back(kEsOrdUnits[r % 10]);
      }
    }
  }
  if (gender == Gender::kFeminine) {
    for (auto &w : words) {
      if (!w.empty() && w.back() == 'o') w.back() = 'a';
    }
  }
  return Join(words, " ");
}

}  // namespace

std::string CardinalWords(uint64_t n, Locale loc, const CardinalOptions &opts) {
  if (n >= kCardinalLimit) {
    throw Error("CardinalWords: value out of range: " + std::to_string(n));
  }
  return loc == Locale::kEnglish ? EnCardinal(n) : EsCardinal(n, opts);
}

std::string OrdinalWords(uint32_t n, Locale loc, Gender gender) {
  if (n < 1 || n > 1000) {
    throw Error("OrdinalWords: value out of range: " + std::to_string(n));
  }
  if (loc == Locale::kSpanish) return EsOrdinal(n, gender);
  std::string c = EnCardinal(n);
  size_t pos = c.rfind(' ');
  if (pos == std::string::npos) return EnOrdinalizeWord(c);
  return c.substr(0, pos + 1) + EnOrdinalizeWord(c.substr(pos + 1));
}

std::string DigitWords(std::string_view digits, Locale loc) {
  if (digits.empty()) throw Error("DigitWords: empty input");
  std::vector<std::string> words;
  words.reserve(digits.size());
  for (char c : digits) {
    if (!IsAsciiDigit(c)) {
      throw Error(std::string("DigitWords: non-digit character: '") + c + "'");
    }
    int d = c - '0';
    words.push_back(loc == Locale::kEnglish ? kEnUnits[d] : kEsUnits[d]);
  }
  return Join(words, " ");
}

std::string DecimalWords(uint64_t int_part, std::string_view frac_digits,
                         Locale loc, DecimalSeparator sep) {
  if (frac_digits.empty()) throw Error("DecimalWords: empty fraction");
  for (char c : frac_digits) {
    if (!IsAsciiDigit(c)) throw Error("DecimalWords: non-digit fraction");
  }
  std::string sep_word;
  if (loc == Locale::kEnglish) {
    sep_word = "point";
  } else {
    sep_word = (sep == DecimalSeparator::kPoint) ? "punto" : "coma";
  }
  std::string frac;
  // Spanish reads the fraction as one cardinal unless a leading zero would
  // lose information or the fraction is too wide for a cardinal.
  if (loc == Locale::kEnglish || frac_digits[0] == '0' ||
      frac_digits.size() > 12) {
    frac = DigitWords(frac_digits, loc);
  } else {
    frac = CardinalWords(std::stoull(std::string(frac_digits)), loc);
  }
  return CardinalWords(int_part, loc) + " " + sep_word + " " + frac;
}

bool ParseFormattedNumber(std::string_view token, FormattedNumber *out) {
  if (token.empty() || !IsAsciiDigit(token.front()) ||
      !IsAsciiDigit(token.back())) {
    return false;
  }
  bool has_comma = false, has_dot = false;
  for (char c : token) {
    if (c == ',') has_comma = true;
    else if (c == '.') has_dot = true;
    else if (!IsAsciiDigit(c)) return false;
  }

  auto groups_of_three = [](const std::vector<std::string> &g) {
    if (g.size() < 2 || g[0].empty() || g[0].size() > 3) return false;
    for (size_t i = 1; i < g.size(); ++i) {
      if (g[i].size() != 3) return false;
    }
    return true;
  };
  auto strip = [](const std::vector<std::string> &g) {
    std::string s;
    for (const auto &p : g) s += p;
    return s;
  };

  std::string int_digits, frac;
  char dec_sep = 0;
  if (has_comma && has_dot) {
    char last = 0;
    for (char c : token) {
      if (c == ',' || c == '.') last = c;
    }
    dec_sep = last;
    char thou = (dec_sep == '.') ? ',' : '.';
    size_t pos = token.rfind(dec_sep);
    std::string_view head = token.substr(0, pos);
    frac = std::string(token.substr(pos + 1));
    if (frac.find(thou) != std::string::npos) return false;
    auto g = Split(head, thou);
    if (!groups_of_three(g)) return false;
    int_digits = strip(g);
  } else if (has_comma || has_dot) {
    char sep = has_comma ? ',' : '.';
    auto g = Split(token, sep);
    for (const auto &p : g) {
      if (p.empty()) return false;
    }
    if (groups_of_three(g)) {
      int_digits = strip(g);
    } else if (g.size() == 2) {
      int_digits = g[0];
      frac = g[1];
      dec_sep = sep;
    } else {
      return false;
    }
  } else {
    int_digits = std::string(token);
  }

  if (int_digits.empty() || int_digits.size() > 12) return false;
  out->int_part = std::stoull(int_digits);
  out->int_digits = std::move(int_digits);
  out->frac_digits = std::move(frac);
  out->decimal_sep = dec_sep;
  return true;
}

std::string YearWords(int year, Locale loc) {
  if (year < 1000 || year > 2999) {
    throw Error("YearWords: year out of range: " + std::to_string(year));
  }
  uint64_t y = static_cast<uint64_t>(year);
  if (loc == Locale::kSpanish) return EsCardinal(y, {});
  if (y % 1000 == 0) return EnCardinal(y);
  if (y > 2000 && y <= 2009) return "two thousand " + EnCardinal(y % 10);
  if (y % 100 == 0) return EnCardinal(y / 100) + " hundred";
  uint64_t hi = y / 100, lo = y % 100;
  std::string tail = lo < 10 ? "oh " + EnCardinal(lo) : EnCardinal(lo);
  return EnCardinal(hi) + " " + tail;
}

}  // namespace ttskit
