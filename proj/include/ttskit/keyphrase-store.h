// include/ttskit/keyphrase-store.h

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

#ifndef TTSKIT_KEYPHRASE_STORE_H_
#define TTSKIT_KEYPHRASE_STORE_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ttskit/llm-client.h"
#include "ttskit/locale.h"
#include "ttskit/seed-tree.h"

namespace ttskit {

// Levenshtein distance over Unicode codepoints.
size_t EditDistance(std::string_view a, std::string_view b);

// Word-order-insensitive similarity in [0, 1]: case-fold, split on
// whitespace, sort tokens, join with single spaces, then
// 1 - distance / max(length). Two empty strings compare as 1.
double TokenSortRatio(std::string_view a, std::string_view b);

struct KeyphraseRecord {
  std::string phrase;
  std::string domain;
  std::string subdomain;
  Locale language = Locale::kEnglish;
  uint64_t created_by_seed = 0;
};

// In-memory, persistable store of keyphrases grouped by (domain, language).
// No two stored phrases within a group reach similarity 0.8; candidates at
// or above the threshold are rejected in favor of the phrase already there.
class KeyphraseStore {
 public:
  static constexpr double kSimilarityThreshold = 0.8;

  KeyphraseStore() = default;
  KeyphraseStore(KeyphraseStore &&other) noexcept
      : groups_(std::move(other.groups_)) {}
  KeyphraseStore &operator=(KeyphraseStore &&other) noexcept {
    groups_ = std::move(other.groups_);
    return *this;
  }

  struct InsertResult {
    bool accepted = false;
    std::string existing;  // the blocking phrase when rejected
  };

  InsertResult TryInsert(const KeyphraseRecord &record);

  size_t CountFor(std::string_view domain, Locale language) const;
  size_t TotalCount() const;

  // k distinct phrases drawn uniformly without replacement; one secondary
  // seed is consumed per draw. Throws when the group holds fewer than k.
  std::vector<KeyphraseRecord> Sample(std::string_view domain, Locale language,
                                      size_t k, SeedTree *seeds) const;

  std::vector<KeyphraseRecord> All() const;

  // One record per line, tab-separated: phrase, domain, subdomain,
  // language code, seed. UTF-8.
  void Save(const std::string &path) const;
  static KeyphraseStore Load(const std::string &path);

 private:
  using GroupKey = std::pair<std::string, Locale>;
  struct Entry {
    KeyphraseRecord record;
    std::string folded;  // case-folded phrase for comparisons
  };
  std::map<GroupKey, std::vector<Entry>> groups_;
  mutable std::mutex mu_;
};

// One pass of the multi-step prompting chain: subdomain listing, a seeded
// subdomain pick, a creative paragraph, then keyphrase extraction. Every
// model response is schema-validated. Returns up to `cap` candidates
// tagged with the picked subdomain. Gateway failures are rethrown with the
// failing step named.
struct ChainResult {
  std::string subdomain;
  std::vector<std::string> keyphrases;
};
ChainResult RunKeyphraseChain(LlmClient *llm, std::string_view domain,
                              Locale language, SeedTree *seeds,
                              size_t cap = 10, double temperature = 1.2,
                              double top_p = 0.9);

// Runs the chain until the (domain, language) group holds at least `need`
// phrases or the round budget runs out (then throws).
void ReplenishKeyphrases(KeyphraseStore *store, LlmClient *llm,
                         std::string_view domain, Locale language, size_t need,
                         SeedTree *seeds, int max_rounds = 32,
                         double temperature = 1.2, double top_p = 0.9);

}  // namespace ttskit

#endif  // TTSKIT_KEYPHRASE_STORE_H_
