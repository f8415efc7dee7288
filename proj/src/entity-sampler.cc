// src/entity-sampler.cc

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

#include "ttskit/entity-sampler.h"

#include <algorithm>

#include "ttskit/num-words.h"
#include "ttskit/seed-tree.h"

namespace ttskit {

namespace {

// ------------------------------------------------------------ small words

std::string AtWord(Locale loc) { return loc == Locale::kEnglish ? "at" : "en"; }
std::string DotWord(Locale loc) {
  return loc == Locale::kEnglish ? "dot" : "punto";
}
std::string UnderscoreWord(Locale loc) {
  return loc == Locale::kEnglish ? "underscore" : "guión bajo";
}
std::string PlusWord(Locale loc) {
  return loc == Locale::kEnglish ? "plus" : "más";
}

std::string SpellLetters(std::string_view s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i];
  }
  return out;
}

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), IsAsciiDigit);
}

std::string PadTwo(int v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

std::string RandomDigits(Rng &rng, size_t n, int first_min = 0) {
  std::string out;
  for (size_t i = 0; i < n; ++i) {
    int lo = (i == 0) ? first_min : 0;
    out += static_cast<char>('0' + rng.Range(lo, 9));
  }
  return out;
}

[[noreturn]] void Fail(SemioticClass cls, std::string_view surface,
                       const std::string &expected) {
  throw VerbalizeError("verbalize(" + SemioticClassName(cls) +
                       "): cannot parse \"" + std::string(surface) +
                       "\": " + expected);
}

// Digit-field parser with an explicit width cap, so an oversized field is
// a grammar error rather than an integer overflow.
int ParseBoundedInt(std::string_view digits, size_t max_len, SemioticClass cls,
                    std::string_view surface, const char *what) {
  if (digits.empty() || digits.size() > max_len || !AllDigits(digits)) {
    Fail(cls, surface, what);
  }
  return std::stoi(std::string(digits));
}

// ------------------------------------------------------------ phone

// Groups are anchored on a final block of four: blocks of three are peeled
// off from the right and a leading single digit merges into the block after
// it. 10 digits read 3-3-4 and 11 digits read 4-3-4.
std::vector<std::string> PhoneGroups(std::string_view digits) {
  std::vector<std::string> out;
  size_t n = digits.size();
  if (n <= 5) {
    out.emplace_back(digits);
    return out;
  }
  size_t rem = n - 4;
  size_t threes = rem / 3, lead = rem % 3;
  std::vector<size_t> sizes;
  if (lead == 1) {
    sizes.push_back(4);
    --threes;
  } else if (lead == 2) {
    sizes.push_back(2);
  }
  for (size_t i = 0; i < threes; ++i) sizes.push_back(3);
  sizes.push_back(4);
  size_t pos = 0;
  for (size_t sz : sizes) {
    out.emplace_back(digits.substr(pos, sz));
    pos += sz;
  }
  return out;
}

std::string PhoneWords(std::string_view country_code, std::string_view digits,
                       Locale loc) {
  std::string out;
  if (!country_code.empty()) {
    out = PlusWord(loc) + " " + DigitWords(country_code, loc) + ", ";
  }
  std::vector<std::string> groups;
  for (const auto &g : PhoneGroups(digits)) {
    groups.push_back(DigitWords(g, loc));
  }
  return out + Join(groups, ", ");
}

// ------------------------------------------------------------ email / url

// Greedy longest-match segmentation of a lowercase letter run into known
// names; unmatched letters are spelled individually.
std::vector<std::string> SegmentLetterRun(
    std::string_view run, const std::unordered_set<std::string> &names,
    size_t max_name_len) {
  std::vector<std::string> words;
  size_t i = 0;
  while (i < run.size()) {
    size_t matched = 0;
    size_t cap = std::min(max_name_len, run.size() - i);
    for (size_t len = cap; len >= 3; --len) {
      if (names.count(std::string(run.substr(i, len)))) {
        matched = len;
        break;
      }
    }
    if (matched) {
      words.emplace_back(run.substr(i, matched));
      i += matched;
    } else {
      words.emplace_back(1, run[i]);
      ++i;
    }
  }
  return words;
}

std::string EmailLocalWords(std::string_view local, Locale loc,
                            const Lexicons &lex) {
  std::vector<std::string> words;
  size_t i = 0;
  while (i < local.size()) {
    char c = local[i];
    if (IsAsciiDigit(c)) {
      size_t b = i;
      while (i < local.size() && IsAsciiDigit(local[i])) ++i;
      words.push_back(DigitWords(local.substr(b, i - b), loc));
    } else if (IsAsciiLower(c)) {
      size_t b = i;
      while (i < local.size() && IsAsciiLower(local[i])) ++i;
      for (auto &w : SegmentLetterRun(local.substr(b, i - b),
                                      lex.EmailNameKeys(loc),
                                      lex.MaxEmailNameLength(loc))) {
        words.push_back(std::move(w));
      }
    } else if (c == '.') {
      words.push_back(DotWord(loc));
      ++i;
    } else if (c == '_') {
      words.push_back(UnderscoreWord(loc));
      ++i;
    } else {
      Fail(SemioticClass::kEmail, local,
           "local part may contain [a-z0-9._] only");
    }
  }
  return Join(words, " ");
}

// Host labels: digit runs spelled, letter runs of three or more read as
// words, shorter runs spelled letter by letter. "www" is always spelled.
std::string HostLabelWords(std::string_view label, Locale loc,
                           SemioticClass cls) {
  if (label == "www") return SpellLetters(label);
  std::vector<std::string> words;
  size_t i = 0;
  while (i < label.size()) {
    char c = label[i];
    if (IsAsciiDigit(c)) {
      size_t b = i;
      while (i < label.size() && IsAsciiDigit(label[i])) ++i;
      words.push_back(DigitWords(label.substr(b, i - b), loc));
    } else if (IsAsciiLower(c)) {
      size_t b = i;
      while (i < label.size() && IsAsciiLower(label[i])) ++i;
      std::string_view run = label.substr(b, i - b);
      words.push_back(run.size() >= 3 ? std::string(run) : SpellLetters(run));
    } else {
      Fail(cls, label, "host label may contain [a-z0-9] only");
    }
  }
  return Join(words, " ");
}

std::string TldWords(std::string_view tld, const Lexicons &lex) {
  if (const std::string *spoken = lex.LookupTldSpoken(tld)) return *spoken;
  return SpellLetters(tld);
}

std::string EmailDomainLabelWords(std::string_view label, Locale loc,
                                  const Lexicons &lex) {
  if (const std::string *spoken = lex.LookupProviderSpoken(label)) {
    return *spoken;
  }
  return HostLabelWords(label, loc, SemioticClass::kEmail);
}

// ------------------------------------------------------------ dates

std::string YearFieldWords(std::string_view field, Locale loc,
                           SemioticClass cls) {
  int v = ParseBoundedInt(field, 4, cls, field, "two- or four-digit year");
  if (field.size() == 4) {
    if (v < 1000 || v > 2999) Fail(cls, field, "year in [1000, 2999]");
    return YearWords(v, loc);
  }
  if (field.size() <= 2) {
    if (loc == Locale::kEnglish) return CardinalWords(v, loc);
    // Spanish two-digit years expand to a full year, pivot at 30.
    return YearWords(v >= 30 ? 1900 + v : 2000 + v, loc);
  }
  Fail(cls, field, "two- or four-digit year");
}

std::string DateWords(Locale loc, int day, int month,
                      const std::string &year_words, const Lexicons &lex) {
  const MonthInfo &mi = lex.months[month - 1];
  if (loc == Locale::kEnglish) {
    return mi.en_full + " " + OrdinalWords(day, loc) + " " + year_words;
  }
  return CardinalWords(day, loc) + " de " + mi.es_full + " de " + year_words;
}

// ------------------------------------------------------------ time

// Hours agree with the feminine "hora": la una, las veintiuna.
std::string HourWordsOf(Locale loc, int h) {
  if (loc == Locale::kEnglish) return CardinalWords(h, loc);
  CardinalOptions opts;
  opts.gender = Gender::kFeminine;
  return CardinalWords(h, loc, opts);
}

std::string MinuteWordsOf(Locale loc, int m) {
  if (m < 10) {
    return (loc == Locale::kEnglish ? "oh " : "cero ") + CardinalWords(m, loc);
  }
  return CardinalWords(m, loc);
}

std::string ClockWords(Locale loc, int h, int m, std::string_view half) {
  std::string out = HourWordsOf(loc, h);
  if (!half.empty()) {
    if (m != 0) out += " " + MinuteWordsOf(loc, m);
    return out + " " + SpellLetters(half);
  }
  if (m == 0) {
    if (loc == Locale::kEnglish) {
      return (h >= 13 || h == 0) ? out + " hundred hours" : out + " o clock";
    }
    return out + " en punto";
  }
  return out + " " + MinuteWordsOf(loc, m);
}

// ------------------------------------------------------------ amounts

struct AmountParts {
  FormattedNumber number;
  int magnitude_exp = 0;  // 0, 3 (k), 6 (m), 9 (b)
  const CurrencyInfo *currency = nullptr;
  std::string passthrough_words;  // currency spelled out in the surface
};

std::string MagnitudeWordEn(int exp) {
  switch (exp) {
    case 3: return "thousand";
    case 6: return "million";
    default: return "billion";
  }
}

std::string MagnitudeWordEs(int exp) {
  switch (exp) {
    case 3: return "mil";
    case 6: return "millones de";
    default: return "mil millones de";
  }
}

bool EndsWith(const std::string &s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string AmountWords(Locale loc, const AmountParts &p, SemioticClass cls) {
  std::string cur_words = p.currency ? (loc == Locale::kEnglish
                                            ? p.currency->en_words
                                            : p.currency->es_words)
                                     : p.passthrough_words;
  Gender gender = p.currency ? p.currency->es_gender : Gender::kMasculine;

  const FormattedNumber &num = p.number;
  bool has_frac = !num.frac_digits.empty();
  DecimalSeparator sep = num.decimal_sep == ',' ? DecimalSeparator::kComma
                                                : DecimalSeparator::kPoint;

  // Decimal with a magnitude suffix: "1.5m" reads as a decimal times the
  // magnitude word.
  if (has_frac && p.magnitude_exp > 0) {
    std::string words = DecimalWords(num.int_part, num.frac_digits, loc, sep);
    std::string mag = loc == Locale::kEnglish ? MagnitudeWordEn(p.magnitude_exp)
                                              : MagnitudeWordEs(p.magnitude_exp);
    return words + " " + mag + " " + cur_words;
  }

  // Exactly two fractional digits with no magnitude are cents.
  if (has_frac && num.frac_digits.size() == 2 && num.frac_digits[0] != '0') {
    uint64_t cents = std::stoull(num.frac_digits);
    if (loc == Locale::kEnglish) {
      return CardinalWords(num.int_part, loc) + " " + cur_words + " and " +
             CardinalWords(cents, loc) + " cents";
    }
    CardinalOptions int_opts;
    int_opts.gender = gender;
    CardinalOptions cent_opts;
    cent_opts.apocope = true;
    return CardinalWords(num.int_part, loc, int_opts) + " con " +
           CardinalWords(cents, loc, cent_opts) + " centavos " + cur_words;
  }

  // Any other fraction: plain decimal reading.
  if (has_frac) {
    return DecimalWords(num.int_part, num.frac_digits, loc, sep) + " " +
           cur_words;
  }

  uint64_t value = num.int_part;
  for (int e = 0; e < p.magnitude_exp; e += 3) {
    if (value >= 1000000000ULL) Fail(cls, "", "amount too large");
    value *= 1000;
  }
  if (loc == Locale::kEnglish) {
    return CardinalWords(value, loc) + " " + cur_words;
  }
  CardinalOptions opts;
  opts.gender = gender;
  opts.apocope = true;
  std::string words = CardinalWords(value, loc, opts);
  // Round millions take "de" before the noun: "millones de libras".
  if (EndsWith(words, "millones") || EndsWith(words, "millón")) words += " de";
  return words + " " + cur_words;
}

// ------------------------------------------------------------ recipes

struct Draft {
  std::string surface;
  std::string normalized;
  std::string recipe_id;
};

struct Ctx {
  const Lexicons &lex;
  const std::vector<std::string> &email_first;
  const std::vector<std::string> &email_last;
  Locale loc;
};

Draft SamplePhone(const Ctx &ctx, Rng &rng) {
  Draft d;
  int recipe = static_cast<int>(rng.Below(3));
  std::string digits, cc;
  if (ctx.loc == Locale::kEnglish) {
    switch (recipe) {
      case 0: {
        d.recipe_id = "phone.en.plain10";
        digits = RandomDigits(rng, 10, 2);
        d.surface = digits;
        break;
      }
      case 1: {
        d.recipe_id = "phone.en.plus1";
        cc = "1";
        digits = RandomDigits(rng, 10, 2);
        d.surface = "+1-" + digits;
        break;
      }
      default: {
        d.recipe_id = "phone.en.dashed";
        digits = RandomDigits(rng, 10, 2);
        d.surface =
            digits.substr(0, 3) + "-" + digits.substr(3, 3) + "-" +
            digits.substr(6);
        break;
      }
    }
  } else {
    switch (recipe) {
      case 0: {
        d.recipe_id = "phone.es.space1";
        digits = RandomDigits(rng, 10, 1);
        d.surface = digits.substr(0, 1) + " " + digits.substr(1);
        break;
      }
      case 1: {
        d.recipe_id = "phone.es.grouped";
        digits = RandomDigits(rng, 10, 1);
        d.surface = digits.substr(0, 4) + " " + digits.substr(4, 2) + " " +
                    digits.substr(6, 2) + " " + digits.substr(8, 2);
        break;
      }
      default: {
        d.recipe_id = "phone.es.plain9";
        static const int kSpainLead[] = {6, 7, 9};
        digits = std::to_string(kSpainLead[rng.Below(3)]) +
                 RandomDigits(rng, 8);
        d.surface = digits;
        break;
      }
    }
  }
  d.normalized = PhoneWords(cc, digits, ctx.loc);
  return d;
}

Draft SampleEmail(const Ctx &ctx, Rng &rng) {
  Draft d;
  const std::string &f = rng.Pick(ctx.email_first);
  const std::string &l = rng.Pick(ctx.email_last);
  std::string local;
  int recipe = static_cast<int>(rng.Below(4));
  if (ctx.loc == Locale::kEnglish) {
    switch (recipe) {
      case 0: {
        d.recipe_id = "email.en.prefix_names";
        size_t n = 3 + rng.Below(3);
        std::string prefix;
        for (size_t i = 0; i < n; ++i) {
          prefix += static_cast<char>('a' + rng.Below(26));
        }
        local = prefix + f + l + RandomDigits(rng, 2, 1);
        break;
      }
      case 1: {
        d.recipe_id = "email.en.letter_digits_names";
        local = std::string(1, static_cast<char>('a' + rng.Below(26))) +
                RandomDigits(rng, 2, 1) + f + l;
        break;
      }
      case 2: {
        d.recipe_id = "email.en.dotted";
        local = RandomDigits(rng, 1, 1) + "." + f + "." + l;
        break;
      }
      default: {
        d.recipe_id = "email.en.underscore";
        local = f + "_" + l + RandomDigits(rng, 1, 1);
        break;
      }
    }
  } else {
    switch (recipe) {
      case 0: {
        d.recipe_id = "email.es.digits_names";
        local = RandomDigits(rng, 2, 1) + f + l;
        break;
      }
      case 1: {
        d.recipe_id = "email.es.lastfirst_digits";
        local = l + f + RandomDigits(rng, 2, 1);
        break;
      }
      case 2: {
        d.recipe_id = "email.es.dotted";
        local = f + "." + l + "." + RandomDigits(rng, 1, 1);
        break;
      }
      default: {
        d.recipe_id = "email.es.underscore";
        local = f + "_" + l + RandomDigits(rng, 1, 1);
        break;
      }
    }
  }
  const auto &provider = rng.Pick(ctx.lex.email_providers);
  d.surface = local + "@" + provider.first + ".com";
  d.normalized = EmailLocalWords(local, ctx.loc, ctx.lex) + " " +
                 AtWord(ctx.loc) + " " + provider.second + " " +
                 DotWord(ctx.loc) + " " + TldWords("com", ctx.lex);
  return d;
}

Draft SampleUrl(const Ctx &ctx, Rng &rng) {
  Draft d;
  const std::string &word = rng.Pick(ctx.lex.url_words);
  const auto &tld = rng.Pick(ctx.lex.tlds);
  std::string code = LocaleCode(ctx.loc);
  int recipe = static_cast<int>(rng.Below(3));
  std::string host_label, scheme;
  switch (recipe) {
    case 0:
      d.recipe_id = "url." + code + ".bare";
      host_label = RandomDigits(rng, 1 + rng.Below(2), 1) + word;
      break;
    case 1:
      d.recipe_id = "url." + code + ".http";
      scheme = "http";
      host_label = word + RandomDigits(rng, 1 + rng.Below(2), 1);
      break;
    default:
      d.recipe_id = "url." + code + ".www";
      host_label = word + RandomDigits(rng, 1, 1);
      break;
  }
  std::string host_words =
      HostLabelWords(host_label, ctx.loc, SemioticClass::kUrl);
  if (recipe == 1) {
    d.surface = "http://" + host_label + "." + tld.first;
    d.normalized = SpellLetters(scheme) + " colon slash slash " + host_words +
                   " " + DotWord(ctx.loc) + " " + TldWords(tld.first, ctx.lex);
  } else if (recipe == 2) {
    d.surface = "www." + host_label + "." + tld.first;
    d.normalized = SpellLetters("www") + " " + DotWord(ctx.loc) + " " +
                   host_words + " " + DotWord(ctx.loc) + " " +
                   TldWords(tld.first, ctx.lex);
  } else {
    d.surface = host_label + "." + tld.first;
    d.normalized = host_words + " " + DotWord(ctx.loc) + " " +
                   TldWords(tld.first, ctx.lex);
  }
  return d;
}

Draft SampleDate(const Ctx &ctx, Rng &rng) {
  Draft d;
  int month = static_cast<int>(rng.Range(1, 12));
  int day = static_cast<int>(rng.Range(1, 28));
  int year = static_cast<int>(rng.Range(1950, 2029));
  int yy = static_cast<int>(rng.Range(10, 99));
  int recipe = static_cast<int>(rng.Below(3));
  const MonthInfo &mi = ctx.lex.months[month - 1];
  if (ctx.loc == Locale::kEnglish) {
    switch (recipe) {
      case 0:
        d.recipe_id = "date.en.mdy_dash";
        d.surface = PadTwo(month) + "-" + PadTwo(day) + "-" +
                    std::to_string(year);
        d.normalized = DateWords(ctx.loc, day, month,
                                 YearWords(year, ctx.loc), ctx.lex);
        break;
      case 1:
        d.recipe_id = "date.en.mdy_slash";
        d.surface = PadTwo(month) + "/" + PadTwo(day) + "/" +
                    std::to_string(year);
        d.normalized = DateWords(ctx.loc, day, month,
                                 YearWords(year, ctx.loc), ctx.lex);
        break;
      default:
        d.recipe_id = "date.en.dmony";
        d.surface = PadTwo(day) + "/" + mi.en_abbrev + "/" + PadTwo(yy);
        d.normalized = DateWords(ctx.loc, day, month,
                                 CardinalWords(yy, ctx.loc), ctx.lex);
        break;
    }
  } else {
    switch (recipe) {
      case 0:
        d.recipe_id = "date.es.dmy_dash";
        d.surface = PadTwo(day) + "-" + PadTwo(month) + "-" +
                    std::to_string(year);
        d.normalized = DateWords(ctx.loc, day, month,
                                 YearWords(year, ctx.loc), ctx.lex);
        break;
      case 1:
        d.recipe_id = "date.es.dmony";
        d.surface = PadTwo(day) + "-" + mi.en_abbrev + "-" +
                    std::to_string(year);
        d.normalized = DateWords(ctx.loc, day, month,
                                 YearWords(year, ctx.loc), ctx.lex);
        break;
      default: {
        // Month-first with a two-digit year; the day is kept above 12 so
        // the day-first reading convention cannot misparse it.
        d.recipe_id = "date.es.mdy_slash2";
        int d13 = static_cast<int>(rng.Range(13, 28));
        d.surface = PadTwo(month) + "/" + std::to_string(d13) + "/" +
                    PadTwo(yy);
        int full = yy >= 30 ? 1900 + yy : 2000 + yy;
        d.normalized = DateWords(ctx.loc, d13, month,
                                 YearWords(full, ctx.loc), ctx.lex);
        break;
      }
    }
  }
  return d;
}

Draft SampleTime(const Ctx &ctx, Rng &rng) {
  Draft d;
  int recipe = static_cast<int>(rng.Below(3));
  if (ctx.loc == Locale::kEnglish) {
    switch (recipe) {
      case 0: {
        d.recipe_id = "time.en.h24";
        int h = static_cast<int>(rng.Range(13, 23));
        int m = static_cast<int>(rng.Range(0, 59));
        d.surface = std::to_string(h) + ":" + PadTwo(m);
        d.normalized = ClockWords(ctx.loc, h, m, "");
        break;
      }
      case 1: {
        d.recipe_id = "time.en.h12";
        int h = static_cast<int>(rng.Range(1, 12));
        int m = static_cast<int>(rng.Range(0, 59));
        std::string half = rng.Below(2) ? "PM" : "AM";
        d.surface = PadTwo(h) + ":" + PadTwo(m) + " " + half;
        d.normalized = ClockWords(ctx.loc, h, m, half);
        break;
      }
      default: {
        d.recipe_id = "time.en.oclock";
        int h = static_cast<int>(rng.Range(1, 12));
        d.surface = std::to_string(h) + " o'clock";
        d.normalized = CardinalWords(h, ctx.loc) + " o clock";
        break;
      }
    }
  } else {
    switch (recipe) {
      case 0: {
        d.recipe_id = "time.es.h24";
        int h = static_cast<int>(rng.Range(1, 23));
        int m = static_cast<int>(rng.Range(0, 59));
        d.surface = PadTwo(h) + ":" + PadTwo(m);
        d.normalized = ClockWords(ctx.loc, h, m, "");
        break;
      }
      case 1: {
        d.recipe_id = "time.es.h12pm";
        int h = static_cast<int>(rng.Range(1, 12));
        int m = static_cast<int>(rng.Range(0, 59));
        std::string half = rng.Below(2) ? "pm" : "am";
        d.surface = PadTwo(h) + ":" + PadTwo(m) + " " + half;
        d.normalized = ClockWords(ctx.loc, h, m, half);
        break;
      }
      default: {
        d.recipe_id = "time.es.enpunto";
        int h = static_cast<int>(rng.Range(2, 12));
        d.surface = "las " + std::to_string(h) + " en punto";
        d.normalized = "las " + HourWordsOf(ctx.loc, h) + " en punto";
        break;
      }
    }
  }
  return d;
}

Draft SamplePercentage(const Ctx &ctx, Rng &rng) {
  Draft d;
  std::string code = LocaleCode(ctx.loc);
  std::string unit = ctx.loc == Locale::kEnglish ? " percent" : " por ciento";
  int recipe = static_cast<int>(rng.Below(3));
  int n = static_cast<int>(rng.Range(1, 99));
  if (recipe == 0) {
    d.recipe_id = "percentage." + code + ".int";
    d.surface = std::to_string(n) + "%";
    d.normalized = CardinalWords(n, ctx.loc) + unit;
    return d;
  }
  int frac = static_cast<int>(rng.Range(10, 99));
  char sep = '.';
  std::string sep_variant = "dec_dot";
  if (ctx.loc == Locale::kSpanish && recipe == 2) {
    sep = ',';
    sep_variant = "dec_comma";
  } else if (ctx.loc == Locale::kEnglish && recipe == 2) {
    frac = static_cast<int>(rng.Range(1, 9));
    sep_variant = "dec1";
  }
  d.recipe_id = "percentage." + code + "." + sep_variant;
  d.surface = std::to_string(n) + std::string(1, sep) + std::to_string(frac) +
              "%";
  d.normalized =
      DecimalWords(n, std::to_string(frac), ctx.loc,
                   sep == ',' ? DecimalSeparator::kComma
                              : DecimalSeparator::kPoint) +
      unit;
  return d;
}

std::string WithThousandsSeparators(uint64_t v) {
  std::string digits = std::to_string(v);
  std::string out;
  size_t lead = digits.size() % 3;
  if (lead) out = digits.substr(0, lead);
  for (size_t i = lead; i < digits.size(); i += 3) {
    if (!out.empty()) out += ',';
    out += digits.substr(i, 3);
  }
  return out;
}

Draft SampleAmount(const Ctx &ctx, Rng &rng) {
  Draft d;
  std::string code = LocaleCode(ctx.loc);
  std::vector<const CurrencyInfo *> symbols, codes;
  for (const auto &ci : ctx.lex.currencies) {
    (ci.is_code ? codes : symbols).push_back(&ci);
  }
  int recipe = static_cast<int>(rng.Below(4));
  AmountParts p;
  switch (recipe) {
    case 0: {
      p.currency = symbols[rng.Below(symbols.size())];
      uint64_t n = rng.Range(1, 999);
      if (ctx.loc == Locale::kEnglish) {
        // Magnitude suffix with the currency written out in words.
        d.recipe_id = "amount.en.suffix_words";
        p.magnitude_exp = rng.Below(2) ? 3 : 6;
        p.number.int_part = n;
        p.passthrough_words = p.currency->en_words;
        p.currency = nullptr;
        d.surface = std::to_string(n) +
                    (p.magnitude_exp == 3 ? "k " : "m ") +
                    p.passthrough_words;
      } else {
        d.recipe_id = "amount.es.sym";
        p.number.int_part = n;
        d.surface = p.currency->key + std::to_string(n);
      }
      break;
    }
    case 1: {
      d.recipe_id = "amount." + code + ".sym_sep_cents";
      p.currency = symbols[rng.Below(symbols.size())];
      uint64_t n = rng.Range(1000, 999999999);
      p.number.int_part = n;
      p.number.frac_digits = std::to_string(rng.Range(10, 99));
      p.number.decimal_sep = '.';
      d.surface = p.currency->key + WithThousandsSeparators(n) + "." +
                  p.number.frac_digits;
      break;
    }
    case 2: {
      d.recipe_id = "amount." + code + ".sym_suffix";
      p.currency = symbols[rng.Below(symbols.size())];
      uint64_t n = rng.Range(1, 999);
      p.number.int_part = n;
      p.magnitude_exp = rng.Below(2) ? 6 : 3;
      d.surface = p.currency->key + std::to_string(n) +
                  (p.magnitude_exp == 6 ? "m" : "k");
      break;
    }
    default: {
      d.recipe_id = "amount." + code + ".code";
      p.currency = codes[rng.Below(codes.size())];
      uint64_t n = rng.Range(1, 999);
      p.number.int_part = n;
      d.surface = std::to_string(n) + " " + p.currency->key;
      break;
    }
  }
  d.normalized = AmountWords(ctx.loc, p, SemioticClass::kAmount);
  return d;
}

Draft SampleAddress(const Ctx &ctx, Rng &rng) {
  Draft d;
  int recipe = static_cast<int>(rng.Below(3));
  std::vector<std::string> sur, norm;
  auto push_both = [&](const std::string &s) {
    sur.push_back(s);
    norm.push_back(s);
  };
  if (ctx.loc == Locale::kEnglish) {
    const std::string &name = rng.Pick(ctx.lex.LastNames(Locale::kEnglish));
    const std::string &suffix = rng.Pick(ctx.lex.street_suffixes_en);
    const auto &state = rng.Pick(ctx.lex.us_states);
    std::string zip = RandomDigits(rng, 5, 1);
    switch (recipe) {
      case 0: {
        d.recipe_id = "address.en.abbrev_state";
        const auto &abbr = rng.Pick(ctx.lex.street_abbrev_en);
        push_both(name);
        push_both(suffix);
        sur.push_back(abbr.first);
        norm.push_back(abbr.second);
        sur.push_back(state.first);
        norm.push_back(state.second);
        break;
      }
      case 1: {
        d.recipe_id = "address.en.full_state";
        push_both(name);
        push_both(suffix);
        push_both(state.second);
        break;
      }
      default: {
        d.recipe_id = "address.en.house";
        std::string house = RandomDigits(rng, 2 + rng.Below(3), 1);
        sur.push_back(house);
        norm.push_back(DigitWords(house, ctx.loc));
        push_both(name);
        push_both(suffix);
        sur.push_back(state.first);
        norm.push_back(state.second);
        break;
      }
    }
    sur.push_back(zip);
    norm.push_back(DigitWords(zip, ctx.loc));
  } else {
    const std::string &tipo = rng.Pick(ctx.lex.street_types_es);
    const std::string &first =
        rng.Pick(ctx.lex.FirstNames(Locale::kSpanish, Gender::kMasculine));
    const std::string &last = rng.Pick(ctx.lex.LastNames(Locale::kSpanish));
    const auto &state = rng.Pick(ctx.lex.us_states);
    const std::string &city = rng.Pick(ctx.lex.cities_es);
    std::string zip = RandomDigits(rng, 5, 1);
    auto push_name = [&](const std::string &n, bool strip) {
      for (const auto &tok : SplitWhitespace(n)) {
        sur.push_back(strip ? StripAccents(tok) : tok);
        norm.push_back(tok);
      }
    };
    switch (recipe) {
      case 0: {
        // Surface with accents stripped, spoken form with them restored.
        d.recipe_id = "address.es.house_de";
        std::string house = RandomDigits(rng, 2, 1);
        sur.push_back(house);
        norm.push_back(DigitWords(house, ctx.loc));
        push_name(tipo, true);
        push_both("de");
        push_name(first, true);
        push_name(last, true);
        const auto &abbr = rng.Pick(ctx.lex.street_abbrev_es);
        sur.push_back(abbr.first);
        norm.push_back(abbr.second);
        push_name(city, true);
        push_both(state.second);
        break;
      }
      case 1: {
        d.recipe_id = "address.es.tipo_name";
        push_name(tipo, false);
        push_name(first, false);
        push_name(last, false);
        push_both(state.second);
        break;
      }
      default: {
        d.recipe_id = "address.es.house_city";
        std::string house = RandomDigits(rng, 2, 1);
        sur.push_back(house);
        norm.push_back(DigitWords(house, ctx.loc));
        push_name(tipo, false);
        push_name(first, false);
        push_name(last, false);
        push_name(city, false);
        break;
      }
    }
    sur.push_back(zip);
    norm.push_back(DigitWords(zip, ctx.loc));
  }
  d.surface = Join(sur, " ");
  d.normalized = Join(norm, " ");
  return d;
}

Draft SamplePerson(const Ctx &ctx, Rng &rng) {
  Draft d;
  int recipe = static_cast<int>(rng.Below(3));
  const Lexicons &lex = ctx.lex;
  auto pick_sal = [&](std::initializer_list<const char *> keys) {
    std::vector<const char *> v(keys);
    return std::string(v[rng.Below(v.size())]);
  };
  std::string sal, rest;
  if (ctx.loc == Locale::kEnglish) {
    switch (recipe) {
      case 0:
        d.recipe_id = "person.en.male";
        sal = pick_sal({"Mr.", "Dr.", "Prof."});
        rest = rng.Pick(lex.FirstNames(ctx.loc, Gender::kMasculine));
        break;
      case 1:
        d.recipe_id = "person.en.female";
        sal = pick_sal({"Mrs.", "Ms.", "Dr."});
        rest = rng.Pick(lex.FirstNames(ctx.loc, Gender::kFeminine));
        break;
      default:
        d.recipe_id = "person.en.title";
        sal = pick_sal({"Dr.", "Prof."});
        rest = rng.Below(2)
                   ? rng.Pick(lex.FirstNames(ctx.loc, Gender::kMasculine))
                   : rng.Pick(lex.FirstNames(ctx.loc, Gender::kFeminine));
        break;
    }
    rest += " " + rng.Pick(lex.LastNames(ctx.loc));
  } else {
    std::vector<std::string> compound;
    for (const auto &n : lex.LastNames(ctx.loc)) {
      if (n.find(' ') != std::string::npos) compound.push_back(n);
    }
    switch (recipe) {
      case 0: {
        d.recipe_id = "person.es.male";
        sal = pick_sal({"Sr.", "Dr.", "Prof."});
        const std::string &l1 = rng.Pick(lex.LastNames(ctx.loc));
        const std::string &l2 = rng.Pick(lex.LastNames(ctx.loc));
        rest = rng.Pick(lex.FirstNames(ctx.loc, Gender::kMasculine)) + " " +
               l1 + " " + l2;
        break;
      }
      case 1: {
        d.recipe_id = "person.es.female";
        sal = pick_sal({"Sra.", "Srta.", "Dra.", "Profa."});
        const std::string &l1 = rng.Pick(lex.LastNames(ctx.loc));
        const std::string &l2 = rng.Pick(lex.LastNames(ctx.loc));
        rest = rng.Pick(lex.FirstNames(ctx.loc, Gender::kFeminine)) + " " +
               l1 + " " + l2;
        break;
      }
      default: {
        d.recipe_id = "person.es.particle";
        sal = pick_sal({"Sr.", "Dr."});
        rest = rng.Pick(lex.FirstNames(ctx.loc, Gender::kMasculine)) + " " +
               compound[rng.Below(compound.size())];
        break;
      }
    }
  }
  const std::string *expansion = lex.LookupSalutation(ctx.loc, sal);
  d.surface = sal + " " + rest;
  d.normalized = *expansion + " " + rest;
  return d;
}

}  // namespace

// ---------------------------------------------------------------- names

std::string SemioticClassName(SemioticClass cls) {
  switch (cls) {
    case SemioticClass::kAddress: return "address";
    case SemioticClass::kPhoneNumber: return "phone_number";
    case SemioticClass::kEmail: return "email";
    case SemioticClass::kUrl: return "url";
    case SemioticClass::kDate: return "date";
    case SemioticClass::kTime: return "time";
    case SemioticClass::kPercentage: return "percentage";
    case SemioticClass::kAmount: return "amount";
    case SemioticClass::kPersonWithSalutation: return "person_with_salutation";
  }
  return "unknown";
}

SemioticClass ParseSemioticClass(std::string_view name) {
  std::string n = ToLowerAscii(name);
  for (SemioticClass cls : AllSemioticClasses()) {
    if (SemioticClassName(cls) == n) return cls;
  }
  throw ConfigError("unknown semiotic class: " + std::string(name));
}

const std::vector<SemioticClass> &AllSemioticClasses() {
  static const auto *all = new std::vector<SemioticClass>{
      SemioticClass::kAddress,    SemioticClass::kPhoneNumber,
      SemioticClass::kEmail,      SemioticClass::kUrl,
      SemioticClass::kDate,       SemioticClass::kTime,
      SemioticClass::kPercentage, SemioticClass::kAmount,
      SemioticClass::kPersonWithSalutation};
  return *all;
}

// ---------------------------------------------------------------- sampler

EntitySampler::EntitySampler() : EntitySampler(&Lexicons::Default()) {}

EntitySampler::EntitySampler(const Lexicons *lexicons) : lex_(lexicons) {
  auto collect = [this](Locale loc, std::vector<std::string> *first,
                        std::vector<std::string> *last) {
    const auto &keys = lex_->EmailNameKeys(loc);
    auto add = [&keys](const std::vector<std::string> &names,
                       std::vector<std::string> *out) {
      for (const auto &n : names) {
        std::string key = StripAccents(FoldCase(n));
        if (keys.count(key)) out->push_back(key);
      }
    };
    add(lex_->FirstNames(loc, Gender::kMasculine), first);
    add(lex_->FirstNames(loc, Gender::kFeminine), first);
    add(lex_->LastNames(loc), last);
  };
  collect(Locale::kEnglish, &email_first_en_, &email_last_en_);
  collect(Locale::kSpanish, &email_first_es_, &email_last_es_);
}

EntitySample EntitySampler::Sample(SemioticClass cls, Locale loc,
                                   uint64_t seed) const {
  Ctx ctx{*lex_,
          loc == Locale::kEnglish ? email_first_en_ : email_first_es_,
          loc == Locale::kEnglish ? email_last_en_ : email_last_es_, loc};
  SeedTree attempts(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Rng rng(attempts.SeedAt(static_cast<uint64_t>(attempt)));
    Draft draft;
    switch (cls) {
      case SemioticClass::kAddress: draft = SampleAddress(ctx, rng); break;
      case SemioticClass::kPhoneNumber: draft = SamplePhone(ctx, rng); break;
      case SemioticClass::kEmail: draft = SampleEmail(ctx, rng); break;
      case SemioticClass::kUrl: draft = SampleUrl(ctx, rng); break;
      case SemioticClass::kDate: draft = SampleDate(ctx, rng); break;
      case SemioticClass::kTime: draft = SampleTime(ctx, rng); break;
      case SemioticClass::kPercentage:
        draft = SamplePercentage(ctx, rng);
        break;
      case SemioticClass::kAmount: draft = SampleAmount(ctx, rng); break;
      case SemioticClass::kPersonWithSalutation:
        draft = SamplePerson(ctx, rng);
        break;
    }
    // A draw is kept only if the surface parses back to the exact spoken
    // form, so Verbalize and Sample can never drift apart (an ambiguous
    // email letter run, for example, triggers a redraw).
    try {
      if (Verbalize(cls, loc, draft.surface) == draft.normalized) {
        EntitySample out;
        out.cls = cls;
        out.locale = loc;
        out.surface = std::move(draft.surface);
        out.normalized = std::move(draft.normalized);
        out.recipe_id = std::move(draft.recipe_id);
        out.seed = seed;
        return out;
      }
    } catch (const VerbalizeError &) {
    }
  }
  throw Error("entity sampler: no self-consistent draw for " +
              SemioticClassName(cls) + "/" + LocaleCode(loc) + " seed " +
              std::to_string(seed));
}

// ---------------------------------------------------------------- parsing

namespace {

std::string VerbalizePhone(const Ctx &ctx, std::string_view s) {
  std::string_view rest = s;
  std::string cc;
  if (!rest.empty() && rest.front() == '+') {
    rest.remove_prefix(1);
    size_t i = 0;
    while (i < rest.size() && IsAsciiDigit(rest[i])) ++i;
    if (i == 0) Fail(SemioticClass::kPhoneNumber, s, "digits after '+'");
    bool has_sep = i < rest.size();
    cc = std::string(rest.substr(0, has_sep ? i : 1));
    rest.remove_prefix(cc.size());
  }
  std::string digits;
  for (char c : rest) {
    if (IsAsciiDigit(c)) {
      digits += c;
    } else if (c != ' ' && c != '-' && c != '(' && c != ')') {
      Fail(SemioticClass::kPhoneNumber, s,
           "digits with space/hyphen/paren separators");
    }
  }
  if (digits.size() < 4) {
    Fail(SemioticClass::kPhoneNumber, s, "at least four digits");
  }
  return PhoneWords(cc, digits, ctx.loc);
}

std::string VerbalizeEmail(const Ctx &ctx, std::string_view s) {
  size_t at = s.find('@');
  if (at == std::string::npos || s.find('@', at + 1) != std::string::npos) {
    Fail(SemioticClass::kEmail, s, "exactly one '@'");
  }
  std::string local = FoldCase(s.substr(0, at));
  std::string domain = FoldCase(s.substr(at + 1));
  if (local.empty() || domain.empty()) {
    Fail(SemioticClass::kEmail, s, "nonempty local part and domain");
  }
  auto labels = Split(domain, '.');
  if (labels.size() < 2) Fail(SemioticClass::kEmail, s, "domain with a dot");
  std::vector<std::string> words;
  words.push_back(EmailLocalWords(local, ctx.loc, ctx.lex));
  words.push_back(AtWord(ctx.loc));
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) Fail(SemioticClass::kEmail, s, "nonempty labels");
    if (i) words.push_back(DotWord(ctx.loc));
    words.push_back(i + 1 == labels.size()
                        ? TldWords(labels[i], ctx.lex)
                        : EmailDomainLabelWords(labels[i], ctx.loc, ctx.lex));
  }
  return Join(words, " ");
}

std::string VerbalizeUrl(const Ctx &ctx, std::string_view s) {
  std::string lower = FoldCase(s);
  std::vector<std::string> words;
  size_t scheme_end = lower.find("://");
  std::string host = lower;
  if (scheme_end != std::string::npos) {
    std::string scheme = lower.substr(0, scheme_end);
    if (scheme.empty() || scheme.size() > 8 ||
        !std::all_of(scheme.begin(), scheme.end(),
                     [](char c) { return IsAsciiLower(c); })) {
      Fail(SemioticClass::kUrl, s, "scheme letters before ://");
    }
    words.push_back(SpellLetters(scheme));
    words.push_back("colon slash slash");
    host = lower.substr(scheme_end + 3);
  }
  if (host.empty() || host.find('/') != std::string::npos ||
      host.find(':') != std::string::npos) {
    Fail(SemioticClass::kUrl, s, "host only (no path or port)");
  }
  auto labels = Split(host, '.');
  if (labels.size() < 2) Fail(SemioticClass::kUrl, s, "host with a dot");
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) Fail(SemioticClass::kUrl, s, "nonempty labels");
    if (i) words.push_back(DotWord(ctx.loc));
    words.push_back(i + 1 == labels.size()
                        ? TldWords(labels[i], ctx.lex)
                        : HostLabelWords(labels[i], ctx.loc,
                                         SemioticClass::kUrl));
  }
  return Join(words, " ");
}

std::string VerbalizeDate(const Ctx &ctx, std::string_view s) {
  char sep = 0;
  for (char c : s) {
    if (c == '-' || c == '/') {
      if (sep && sep != c) Fail(SemioticClass::kDate, s, "one separator kind");
      sep = c;
    }
  }
  if (!sep) Fail(SemioticClass::kDate, s, "'-' or '/' separated fields");
  auto fields = Split(s, sep);
  if (fields.size() != 3) Fail(SemioticClass::kDate, s, "three fields");

  int day = 0, month = 0;
  if (!AllDigits(fields[1])) {
    // day-MonthName-year
    month = ctx.lex.MonthFromName(fields[1]);
    if (!month) Fail(SemioticClass::kDate, s, "a month name in the middle");
    day = ParseBoundedInt(fields[0], 2, SemioticClass::kDate, s,
                          "a one- or two-digit day");
  } else {
    int a = ParseBoundedInt(fields[0], 2, SemioticClass::kDate, s,
                            "one- or two-digit day and month fields");
    int b = ParseBoundedInt(fields[1], 2, SemioticClass::kDate, s,
                            "one- or two-digit day and month fields");
    // Numeric dates resolve by locale convention (en month-first, es
    // day-first), swapping when the preferred reading is impossible. This
    // parse is lossy by design for ambiguous surfaces; recipes only emit
    // surfaces whose convention reading matches their own field order.
    if (ctx.loc == Locale::kEnglish) {
      month = a;
      day = b;
    } else {
      day = a;
      month = b;
    }
    if (month > 12 && day <= 12) std::swap(month, day);
  }
  if (month < 1 || month > 12) Fail(SemioticClass::kDate, s, "month 1-12");
  if (day < 1 || day > 31) Fail(SemioticClass::kDate, s, "day 1-31");
  std::string year_words = YearFieldWords(fields[2], ctx.loc,
                                          SemioticClass::kDate);
  return DateWords(ctx.loc, day, month, year_words, ctx.lex);
}

std::string VerbalizeTime(const Ctx &ctx, std::string_view s) {
  std::string text = Trim(s);
  auto tokens = SplitWhitespace(text);

  // "las 2 en punto" / "la 1 en punto"
  if (tokens.size() == 4 && (tokens[0] == "las" || tokens[0] == "la") &&
      tokens[2] == "en" && tokens[3] == "punto" && AllDigits(tokens[1])) {
    int h = ParseBoundedInt(tokens[1], 2, SemioticClass::kTime, s, "hour");
    if (h < 1 || h > 23) Fail(SemioticClass::kTime, s, "hour 1-23");
    return tokens[0] + " " + HourWordsOf(Locale::kSpanish, h) + " en punto";
  }

  // "11 o'clock"
  if (tokens.size() == 2 && AllDigits(tokens[0]) &&
      ToLowerAscii(tokens[1]) == "o'clock") {
    int h = ParseBoundedInt(tokens[0], 2, SemioticClass::kTime, s, "hour");
    if (h < 1 || h > 12) Fail(SemioticClass::kTime, s, "hour 1-12");
    return CardinalWords(h, ctx.loc) + " o clock";
  }

  // "HH:MM" with optional AM/PM token
  if (tokens.empty() || tokens.size() > 2) {
    Fail(SemioticClass::kTime, s, "a clock time");
  }
  std::string half;
  if (tokens.size() == 2) {
    std::string t = tokens[1];
    std::string tl = ToLowerAscii(t);
    if (tl != "am" && tl != "pm") {
      Fail(SemioticClass::kTime, s, "AM or PM suffix");
    }
    half = t;
  }
  auto hm = Split(tokens[0], ':');
  if (hm.size() != 2 || !AllDigits(hm[0]) || !AllDigits(hm[1]) ||
      hm[0].size() > 2 || hm[1].size() != 2) {
    Fail(SemioticClass::kTime, s, "HH:MM");
  }
  int h = ParseBoundedInt(hm[0], 2, SemioticClass::kTime, s, "hour");
  int m = ParseBoundedInt(hm[1], 2, SemioticClass::kTime, s, "minutes");
  if (m > 59) Fail(SemioticClass::kTime, s, "minutes 0-59");
  if (h > 23 || (!half.empty() && h > 12)) {
    Fail(SemioticClass::kTime, s, "hour in range");
  }
  return ClockWords(ctx.loc, h, m, half);
}

std::string VerbalizePercentage(const Ctx &ctx, std::string_view s) {
  std::string text = Trim(s);
  if (text.empty() || text.back() != '%') {
    Fail(SemioticClass::kPercentage, s, "a number ending in %");
  }
  text.pop_back();
  text = Trim(text);
  FormattedNumber num;
  if (!ParseFormattedNumber(text, &num)) {
    Fail(SemioticClass::kPercentage, s, "a plain or decimal number");
  }
  std::string unit = ctx.loc == Locale::kEnglish ? " percent" : " por ciento";
  if (num.frac_digits.empty()) {
    return CardinalWords(num.int_part, ctx.loc) + unit;
  }
  DecimalSeparator sep = num.decimal_sep == ',' ? DecimalSeparator::kComma
                                                : DecimalSeparator::kPoint;
  return DecimalWords(num.int_part, num.frac_digits, ctx.loc, sep) + unit;
}

std::string VerbalizeAmount(const Ctx &ctx, std::string_view s) {
  std::string text = Trim(s);
  AmountParts p;

  // Longest-match currency symbol prefix.
  const CurrencyInfo *symbol = nullptr;
  size_t symbol_len = 0;
  for (const auto &ci : ctx.lex.currencies) {
    if (ci.is_code) continue;
    if (text.size() > ci.key.size() &&
        text.compare(0, ci.key.size(), ci.key) == 0 &&
        ci.key.size() > symbol_len) {
      symbol = &ci;
      symbol_len = ci.key.size();
    }
  }
  if (symbol) {
    p.currency = symbol;
    text = Trim(text.substr(symbol_len));
  }

  auto tokens = SplitWhitespace(text);
  if (tokens.empty() || !IsAsciiDigit(tokens[0][0])) {
    Fail(SemioticClass::kAmount, s, "a number (after any currency symbol)");
  }
  std::string number = tokens[0];
  char last = number.back();
  if (last == 'k' || last == 'K') {
    p.magnitude_exp = 3;
  } else if (last == 'm' || last == 'M') {
    p.magnitude_exp = 6;
  } else if (last == 'b' || last == 'B') {
    p.magnitude_exp = 9;
  }
  if (p.magnitude_exp) number.pop_back();
  if (!ParseFormattedNumber(number, &p.number)) {
    Fail(SemioticClass::kAmount, s, "a plain or decimal number");
  }

  std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
  if (!rest.empty()) {
    if (symbol) {
      Fail(SemioticClass::kAmount, s,
           "either a currency symbol or trailing currency words, not both");
    }
    if (rest.size() == 1) {
      if (const CurrencyInfo *code = ctx.lex.LookupCurrency(rest[0])) {
        p.currency = code;
      }
    }
    if (!p.currency) {
      for (const auto &tok : rest) {
        for (char c : tok) {
          if (IsAsciiDigit(c)) {
            Fail(SemioticClass::kAmount, s, "currency words without digits");
          }
        }
      }
      p.passthrough_words = Join(rest, " ");
    }
  }
  if (!p.currency && p.passthrough_words.empty()) {
    Fail(SemioticClass::kAmount, s, "a currency symbol, code, or words");
  }
  return AmountWords(ctx.loc, p, SemioticClass::kAmount);
}

std::string VerbalizeAddress(const Ctx &ctx, std::string_view s) {
  auto tokens = SplitWhitespace(s);
  if (tokens.empty()) Fail(SemioticClass::kAddress, s, "a nonempty address");
  std::vector<std::string> words;
  for (const auto &token : tokens) {
    if (AllDigits(token)) {
      words.push_back(DigitWords(token, ctx.loc));
      continue;
    }
    // English ordinals like 10th / 21st.
    if (ctx.loc == Locale::kEnglish && token.size() > 2 &&
        token.size() <= 6) {
      std::string_view head(token.data(), token.size() - 2);
      std::string tail = ToLowerAscii(token.substr(token.size() - 2));
      if (AllDigits(head) &&
          (tail == "th" || tail == "st" || tail == "nd" || tail == "rd")) {
        int n = std::stoi(std::string(head));
        if (n >= 1 && n <= 1000) {
          words.push_back(OrdinalWords(n, ctx.loc));
          continue;
        }
      }
    }
    std::string bare = token;
    while (!bare.empty() && (bare.back() == '.' || bare.back() == ',')) {
      bare.pop_back();
    }
    if (bare.empty()) continue;
    if (bare.size() == 2 && IsAsciiUpper(bare[0]) && IsAsciiUpper(bare[1])) {
      if (const std::string *state = ctx.lex.LookupState(bare)) {
        words.push_back(*state);
        continue;
      }
    }
    if (const std::string *exp = ctx.lex.LookupStreetAbbrev(ctx.loc, bare)) {
      words.push_back(*exp);
      continue;
    }
    if (ctx.loc == Locale::kSpanish) {
      if (const std::string *canon = ctx.lex.RestoreAccents(bare)) {
        words.push_back(*canon);
        continue;
      }
    }
    words.push_back(bare);
  }
  if (words.empty()) Fail(SemioticClass::kAddress, s, "address tokens");
  return Join(words, " ");
}

std::string VerbalizePerson(const Ctx &ctx, std::string_view s) {
  auto tokens = SplitWhitespace(s);
  // A leading article folds into the salutation expansion, which already
  // carries one ("El Dr. Johnson" -> "El Doctor Johnson").
  size_t start = 0;
  if (ctx.loc == Locale::kSpanish && tokens.size() > 2 &&
      (tokens[0] == "El" || tokens[0] == "La")) {
    start = 1;
  }
  if (tokens.size() < start + 2) {
    Fail(SemioticClass::kPersonWithSalutation, s, "salutation plus a name");
  }
  const std::string *expansion =
      ctx.lex.LookupSalutation(ctx.loc, tokens[start]);
  if (!expansion && tokens[start].back() != '.') {
    expansion = ctx.lex.LookupSalutation(ctx.loc, tokens[start] + ".");
  }
  if (!expansion) {
    Fail(SemioticClass::kPersonWithSalutation, s,
         "a known salutation (" + tokens[start] + ")");
  }
  std::vector<std::string> words;
  words.push_back(*expansion);
  for (size_t i = start + 1; i < tokens.size(); ++i) words.push_back(tokens[i]);
  return Join(words, " ");
}

}  // namespace

std::string EntitySampler::Verbalize(SemioticClass cls, Locale loc,
                                     std::string_view surface) const {
  Ctx ctx{*lex_,
          loc == Locale::kEnglish ? email_first_en_ : email_first_es_,
          loc == Locale::kEnglish ? email_last_en_ : email_last_es_, loc};
  std::string s = Trim(surface);
  if (s.empty()) Fail(cls, surface, "nonempty surface");
  switch (cls) {
    case SemioticClass::kAddress: return VerbalizeAddress(ctx, s);
    case SemioticClass::kPhoneNumber: return VerbalizePhone(ctx, s);
    case SemioticClass::kEmail: return VerbalizeEmail(ctx, s);
    case SemioticClass::kUrl: return VerbalizeUrl(ctx, s);
    case SemioticClass::kDate: return VerbalizeDate(ctx, s);
    case SemioticClass::kTime: return VerbalizeTime(ctx, s);
    case SemioticClass::kPercentage: return VerbalizePercentage(ctx, s);
    case SemioticClass::kAmount: return VerbalizeAmount(ctx, s);
    case SemioticClass::kPersonWithSalutation: return VerbalizePerson(ctx, s);
  }
  Fail(cls, surface, "known semiotic class");
}

}  // namespace ttskit
