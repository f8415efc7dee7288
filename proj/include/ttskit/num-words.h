// include/ttskit/num-words.h

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

#ifndef TTSKIT_NUM_WORDS_H_
#define TTSKIT_NUM_WORDS_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "ttskit/locale.h"

namespace ttskit {

// Locale-aware verbalization of numbers into words. All outputs are
// lowercase, space-joined, and contain no ASCII digits; callers re-case.

// English style constant: insert "and" before the trailing sub-hundred part
// of each hundreds group ("eight hundred and sixty three thousand"). A
// no-"and" broadcast style would flip this flag.
inline constexpr bool kEnglishHundredAnd = true;

struct CardinalOptions {
  Gender gender = Gender::kMasculine;
  // Spanish apocope before a masculine noun: "veintiún centavos",
  // "setenta y un centavos". No effect in English.
  bool apocope = false;
};

// n in [0, 10^12). Throws ttskit::Error when out of range.
std::string CardinalWords(uint64_t n, Locale loc,
                          const CardinalOptions &opts = {});

// n in [1, 1000]. Throws ttskit::Error when out of range.
std::string OrdinalWords(uint32_t n, Locale loc,
                         Gender gender = Gender::kMasculine);

// Each decimal digit spelled independently, space-separated.
// Throws ttskit::Error on empty input or non-digit characters.
std::string DigitWords(std::string_view digits, Locale loc);

enum class DecimalSeparator {
  kLocaleDefault,  // en "point", es "coma"
  kPoint,          // en "point", es "punto"
  kComma,          // es "coma"
};

// int_part + separator word + fraction. English reads the fraction digit by
// digit ("thirty nine point two nine"); Spanish reads it as a cardinal
// ("noventa y tres coma cuarenta y cinco"), falling back to digit-by-digit
// when the fraction has a leading zero. frac_digits must be nonempty digits.
std::string DecimalWords(uint64_t int_part, std::string_view frac_digits,
                         Locale loc,
                         DecimalSeparator sep = DecimalSeparator::kLocaleDefault);

// y in [1000, 2999]. English reads two-digit pairs ("nineteen ninety
// seven", "twenty twenty three") with special cases for even hundreds and
// 2000-2009; Spanish reads the full cardinal. Throws on out of range.
std::string YearWords(int year, Locale loc);

// A numeric token with optional thousands separators and an optional
// decimal part, e.g. "485,986,561.71", "93,45", "1,234", "69.76".
struct FormattedNumber {
  uint64_t int_part = 0;
  std::string int_digits;   // integer digits without separators
  std::string frac_digits;  // empty when there is no decimal part
  char decimal_sep = 0;     // '.' or ',' when frac_digits is nonempty
};

// Locale-independent disambiguation: with both separators present, the
// last-occurring one is the decimal mark and the other must form 3-digit
// groups; with a single separator, 3-digit groups read as thousands and
// anything else as a decimal. Returns false when the token is not a number
// in any of these shapes.
bool ParseFormattedNumber(std::string_view token, FormattedNumber *out);

}  // namespace ttskit

#endif  // TTSKIT_NUM_WORDS_H_
