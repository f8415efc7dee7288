// src/lexicon.cc

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

#include "ttskit/lexicon.h"

#include <algorithm>
#include <fstream>

#include "ttskit/util.h"

namespace ttskit {

namespace {

std::vector<std::vector<std::string>> ReadRows(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("lexicon file missing: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    rows.push_back(Split(line, '\t'));
  }
  return rows;
}

std::vector<std::string> ReadWords(const std::string &path) {
  std::vector<std::string> out;
  for (auto &row : ReadRows(path)) out.push_back(row[0]);
  return out;
}

std::vector<std::pair<std::string, std::string>> ReadPairs(
    const std::string &path) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto &row : ReadRows(path)) {
    if (row.size() < 2) throw ParseError("expected two columns in " + path);
    out.emplace_back(row[0], row[1]);
  }
  return out;
}

std::string FoldKey(std::string_view s) { return StripAccents(FoldCase(s)); }

}  // namespace

Lexicons Lexicons::Load(const std::string &dir) {
  Lexicons lex;
  auto path = [&dir](const char *f) { return dir + "/" + f; };

  for (auto &row : ReadRows(path("first_names_en.txt"))) {
    if (row.size() < 2) throw ParseError("first_names_en.txt needs gender");
    (row[1] == "f" ? lex.first_names_en_f_ : lex.first_names_en_m_)
        .push_back(row[0]);
  }
  for (auto &row : ReadRows(path("first_names_es.txt"))) {
    if (row.size() < 2) throw ParseError("first_names_es.txt needs gender");
    (row[1] == "f" ? lex.first_names_es_f_ : lex.first_names_es_m_)
        .push_back(row[0]);
  }
  lex.last_names_en_ = ReadWords(path("last_names_en.txt"));
  lex.last_names_es_ = ReadWords(path("last_names_es.txt"));
  lex.street_suffixes_en = ReadWords(path("street_suffixes_en.txt"));
  lex.street_types_es = ReadWords(path("street_types_es.txt"));
  lex.cities_es = ReadWords(path("cities_es.txt"));
  lex.url_words = ReadWords(path("url_words.txt"));
  lex.domains_default = ReadWords(path("domains_default.txt"));

  lex.street_abbrev_en = ReadPairs(path("street_abbrev_en.tsv"));
  lex.street_abbrev_es = ReadPairs(path("street_abbrev_es.tsv"));
  lex.us_states = ReadPairs(path("us_states.tsv"));
  lex.email_providers = ReadPairs(path("email_providers.tsv"));
  lex.tlds = ReadPairs(path("tlds.tsv"));
  lex.salutations_en = ReadPairs(path("salutations_en.tsv"));
  lex.salutations_es = ReadPairs(path("salutations_es.tsv"));

  for (auto &row : ReadRows(path("currencies.tsv"))) {
    if (row.size() < 5) throw ParseError("currencies.tsv needs five columns");
    CurrencyInfo ci;
    ci.key = row[0];
    ci.is_code = (row[1] == "code");
    ci.en_words = row[2];
    ci.es_words = row[3];
    ci.es_gender = (row[4] == "f") ? Gender::kFeminine : Gender::kMasculine;
    lex.currencies.push_back(std::move(ci));
  }
  for (auto &row : ReadRows(path("months.tsv"))) {
    if (row.size() < 4) throw ParseError("months.tsv needs four columns");
    lex.months.push_back({row[1], row[2], row[3]});
  }
  if (lex.months.size() != 12) throw ParseError("months.tsv: expected 12 rows");
  for (auto &w : ReadWords(path("acronym_whitelist.txt"))) {
    lex.acronym_whitelist.insert(w);
  }

  for (auto &[k, v] : lex.street_abbrev_en) lex.street_abbrev_en_map_[k] = v;
  for (auto &[k, v] : lex.street_abbrev_es) lex.street_abbrev_es_map_[k] = v;
  for (auto &[k, v] : lex.us_states) lex.state_map_[k] = v;
  for (auto &[k, v] : lex.salutations_en) lex.salutation_en_map_[k] = v;
  for (auto &[k, v] : lex.salutations_es) lex.salutation_es_map_[k] = v;
  for (auto &[k, v] : lex.email_providers) lex.provider_map_[k] = v;
  for (auto &[k, v] : lex.tlds) lex.tld_map_[k] = v;
  for (size_t i = 0; i < lex.months.size(); ++i) {
    lex.month_map_[FoldKey(lex.months[i].en_full)] = static_cast<int>(i + 1);
    lex.month_map_[FoldKey(lex.months[i].en_abbrev)] = static_cast<int>(i + 1);
    lex.month_map_[FoldKey(lex.months[i].es_full)] = static_cast<int>(i + 1);
  }

  auto index_names =
      [](const std::vector<const std::vector<std::string> *> &lists,
         std::unordered_set<std::string> *keys, size_t *maxlen) {
        for (const auto *list : lists) {
          for (const auto &name : *list) {
            std::string key = FoldKey(name);
            if (key.find(' ') != std::string::npos || key.size() < 3) continue;
            keys->insert(key);
            *maxlen = std::max(*maxlen, key.size());
          }
        }
      };
  index_names({&lex.first_names_en_m_, &lex.first_names_en_f_,
               &lex.last_names_en_},
              &lex.email_names_en_, &lex.max_email_name_en_);
  index_names({&lex.first_names_es_m_, &lex.first_names_es_f_,
               &lex.last_names_es_},
              &lex.email_names_es_, &lex.max_email_name_es_);

  auto index_accents = [&lex](const std::vector<std::string> &names) {
    for (const auto &name : names) {
      std::string key = FoldKey(name);
      if (key != FoldCase(name)) lex.accent_restore_.emplace(key, name);
    }
  };
  index_accents(lex.first_names_es_m_);
  index_accents(lex.first_names_es_f_);
  index_accents(lex.last_names_es_);
  index_accents(lex.cities_es);
  index_accents(lex.street_types_es);

  return lex;
}

const Lexicons &Lexicons::Default() {
  static const Lexicons *lex = new Lexicons(Load(DataDir()));
  return *lex;
}

const std::vector<std::string> &Lexicons::FirstNames(Locale loc,
                                                     Gender g) const {
  if (loc == Locale::kEnglish) {
    return g == Gender::kFeminine ? first_names_en_f_ : first_names_en_m_;
  }
  return g == Gender::kFeminine ? first_names_es_f_ : first_names_es_m_;
}

const std::vector<std::string> &Lexicons::LastNames(Locale loc) const {
  return loc == Locale::kEnglish ? last_names_en_ : last_names_es_;
}

const std::string *Lexicons::LookupStreetAbbrev(Locale loc,
                                                std::string_view token) const {
  const auto &m =
      loc == Locale::kEnglish ? street_abbrev_en_map_ : street_abbrev_es_map_;
  auto it = m.find(token);
  return it == m.end() ? nullptr : &it->second;
}

const std::string *Lexicons::LookupState(std::string_view abbrev) const {
  auto it = state_map_.find(abbrev);
  return it == state_map_.end() ? nullptr : &it->second;
}

const std::string *Lexicons::LookupSalutation(Locale loc,
                                              std::string_view token) const {
  const auto &m =
      loc == Locale::kEnglish ? salutation_en_map_ : salutation_es_map_;
  auto it = m.find(token);
  return it == m.end() ? nullptr : &it->second;
}

const std::string *Lexicons::LookupProviderSpoken(
    std::string_view provider) const {
  auto it = provider_map_.find(provider);
  return it == provider_map_.end() ? nullptr : &it->second;
}

const std::string *Lexicons::LookupTldSpoken(std::string_view tld) const {
  auto it = tld_map_.find(tld);
  return it == tld_map_.end() ? nullptr : &it->second;
}

const CurrencyInfo *Lexicons::LookupCurrency(std::string_view key) const {
  for (const auto &ci : currencies) {
    if (ci.key == key) return &ci;
  }
  return nullptr;
}

int Lexicons::MonthFromName(std::string_view name) const {
  auto it = month_map_.find(FoldKey(name));
  return it == month_map_.end() ? 0 : it->second;
}

const std::unordered_set<std::string> &Lexicons::EmailNameKeys(
    Locale loc) const {
  return loc == Locale::kEnglish ? email_names_en_ : email_names_es_;
}

size_t Lexicons::MaxEmailNameLength(Locale loc) const {
  return loc == Locale::kEnglish ? max_email_name_en_ : max_email_name_es_;
}

const std::string *Lexicons::RestoreAccents(std::string_view token) const {
  auto it = accent_restore_.find(FoldKey(token));
  return it == accent_restore_.end() ? nullptr : &it->second;
}

}  // namespace ttskit
