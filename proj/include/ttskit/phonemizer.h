// include/ttskit/phonemizer.h

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

#ifndef TTSKIT_PHONEMIZER_H_
#define TTSKIT_PHONEMIZER_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttskit/locale.h"

namespace ttskit {

// One phoneme symbol from the locale's declared inventory.
using Phoneme = std::string;
using PhonemeSeq = std::vector<Phoneme>;

// Grapheme-to-phoneme conversion against a fixed inventory: English uses a
// 39-symbol ARPABET set (stress stripped) backed by a shipped lexicon with
// deterministic letter-to-sound fallback for out-of-vocabulary words;
// Spanish is rule-based over a 24-symbol set. Diphone counts are only
// meaningful relative to these inventories.
class Phonemizer {
 public:
  Phonemizer();  // loads the lexicon from DataDir()
  explicit Phonemizer(const std::string &data_dir);

  // Phonemizes running text word by word; word boundaries break adjacency,
  // so the result is a sequence of per-word phoneme runs.
  std::vector<PhonemeSeq> WordPhonemes(std::string_view text,
                                       Locale loc) const;

  // Flattened phonemes of a single word (total: an OOV word goes through
  // fallback rules and yields a nonempty sequence if it has any letters).
  PhonemeSeq Word(std::string_view word, Locale loc) const;

  const std::set<Phoneme> &Inventory(Locale loc) const;

 private:
  std::map<std::string, PhonemeSeq> lexicon_en_;
  std::set<Phoneme> inventory_en_;
  std::set<Phoneme> inventory_es_;
};

// Unique adjacent phoneme pairs pooled across the corpus; duplicates and
// repeated texts do not change the count.
size_t DiphoneCoverage(const std::vector<std::string> &texts, Locale loc,
                       const Phonemizer &phonemizer);

// Distinct diphones as pairs, for set-algebra style assertions.
std::set<std::pair<Phoneme, Phoneme>> DiphoneSet(
    const std::vector<std::string> &texts, Locale loc,
    const Phonemizer &phonemizer);

}  // namespace ttskit

#endif  // TTSKIT_PHONEMIZER_H_
