// include/ttskit/lexicon.h

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

#ifndef TTSKIT_LEXICON_H_
#define TTSKIT_LEXICON_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ttskit/locale.h"

namespace ttskit {

struct CurrencyInfo {
  std::string key;        // "$", "CA$", "USD", ...
  bool is_code = false;   // code appears as a trailing token, symbol as prefix
  std::string en_words;
  std::string es_words;
  Gender es_gender = Gender::kMasculine;
};

struct MonthInfo {
  std::string en_full;   // January
  std::string en_abbrev; // Jan
  std::string es_full;   // enero
};

// Embedded lexicons backing entity generation and verbalization. Files are
// UTF-8, one entry per line, optional tab-separated columns. Entry order in
// the files is the draw order, so editing a file changes generated corpora.
class Lexicons {
 public:
  // Loads from the given directory (default: DataDir()).
  static Lexicons Load(const std::string &dir);
  static const Lexicons &Default();

  const std::vector<std::string> &FirstNames(Locale loc, Gender g) const;
  const std::vector<std::string> &LastNames(Locale loc) const;

  std::vector<std::string> street_suffixes_en;
  std::vector<std::string> street_types_es;
  std::vector<std::string> cities_es;
  std::vector<std::string> url_words;
  std::vector<std::string> domains_default;

  // Ordered key lists for deterministic draws + lookup maps.
  std::vector<std::pair<std::string, std::string>> street_abbrev_en;
  std::vector<std::pair<std::string, std::string>> street_abbrev_es;
  std::vector<std::pair<std::string, std::string>> us_states;
  std::vector<std::pair<std::string, std::string>> email_providers;
  std::vector<std::pair<std::string, std::string>> tlds;
  std::vector<std::pair<std::string, std::string>> salutations_en;
  std::vector<std::pair<std::string, std::string>> salutations_es;
  std::vector<CurrencyInfo> currencies;
  std::vector<MonthInfo> months;  // index 0 = January
  std::unordered_set<std::string> acronym_whitelist;

  const std::vector<std::pair<std::string, std::string>> &StreetAbbrev(
      Locale loc) const {
    return loc == Locale::kEnglish ? street_abbrev_en : street_abbrev_es;
  }
  const std::vector<std::pair<std::string, std::string>> &Salutations(
      Locale loc) const {
    return loc == Locale::kEnglish ? salutations_en : salutations_es;
  }

  // nullptr when absent.
  const std::string *LookupStreetAbbrev(Locale loc, std::string_view token) const;
  const std::string *LookupState(std::string_view abbrev) const;
  const std::string *LookupSalutation(Locale loc, std::string_view token) const;
  const std::string *LookupProviderSpoken(std::string_view provider) const;
  const std::string *LookupTldSpoken(std::string_view tld) const;
  const CurrencyInfo *LookupCurrency(std::string_view key) const;
  // Month by 1-based number or by en full/abbrev or es full name
  // (case-insensitive); 0 when not a month.
  int MonthFromName(std::string_view name) const;

  // ASCII-folded (lowercased, accent-stripped) single-word name keys for
  // greedy email local-part segmentation, per locale.
  const std::unordered_set<std::string> &EmailNameKeys(Locale loc) const;
  size_t MaxEmailNameLength(Locale loc) const;

  // Accent restoration for address tokens: folded key -> canonical form
  // ("jimenez" -> "Jiménez"). Only names whose canonical form differs from
  // the folded key are present.
  const std::string *RestoreAccents(std::string_view token) const;

 private:
  std::vector<std::string> first_names_en_m_, first_names_en_f_;
  std::vector<std::string> first_names_es_m_, first_names_es_f_;
  std::vector<std::string> last_names_en_, last_names_es_;

  std::map<std::string, std::string, std::less<>> street_abbrev_en_map_,
      street_abbrev_es_map_, state_map_, salutation_en_map_,
      salutation_es_map_, provider_map_, tld_map_;
  std::map<std::string, int, std::less<>> month_map_;
  std::unordered_set<std::string> email_names_en_, email_names_es_;
  size_t max_email_name_en_ = 0, max_email_name_es_ = 0;
  std::unordered_map<std::string, std::string> accent_restore_;
};

}  // namespace ttskit

#endif  // TTSKIT_LEXICON_H_
