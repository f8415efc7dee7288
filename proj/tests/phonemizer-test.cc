// tests/phonemizer-test.cc

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

#include "ttskit/phonemizer.h"

#include <string>

#include "gtest/gtest.h"
#include "ttskit/seed-tree.h"

namespace ttskit {
namespace {

class PhonemizerTest : public ::testing::Test {
 protected:
  Phonemizer ph_;
};

TEST_F(PhonemizerTest, LexiconLookup) {
  EXPECT_EQ(ph_.Word("cat", Locale::kEnglish), (PhonemeSeq{"K", "AE", "T"}));
  EXPECT_EQ(ph_.Word("Cat", Locale::kEnglish), (PhonemeSeq{"K", "AE", "T"}));
}

TEST_F(PhonemizerTest, EmptyTextYieldsNothing) {
  EXPECT_TRUE(ph_.WordPhonemes("", Locale::kEnglish).empty());
  EXPECT_TRUE(ph_.WordPhonemes("1234 ... !!", Locale::kEnglish).empty());
}

TEST_F(PhonemizerTest, FallbackIsTotal) {
  for (const char *oov : {"zyxwv", "blorptastic", "qqq", "strange"}) {
    PhonemeSeq seq = ph_.Word(oov, Locale::kEnglish);
    EXPECT_FALSE(seq.empty()) << oov;
    for (const auto &p : seq) {
      EXPECT_TRUE(ph_.Inventory(Locale::kEnglish).count(p)) << p;
    }
  }
}

TEST_F(PhonemizerTest, SpanishRules) {
  EXPECT_EQ(ph_.Word("casa", Locale::kSpanish),
            (PhonemeSeq{"k", "a", "s", "a"}));
  EXPECT_EQ(ph_.Word("cinco", Locale::kSpanish),
            (PhonemeSeq{"T", "i", "n", "k", "o"}));
  EXPECT_EQ(ph_.Word("que", Locale::kSpanish), (PhonemeSeq{"k", "e"}));
  EXPECT_EQ(ph_.Word("guerra", Locale::kSpanish),
            (PhonemeSeq{"g", "e", "RR", "a"}));
  EXPECT_EQ(ph_.Word("llama", Locale::kSpanish),
            (PhonemeSeq{"LL", "a", "m", "a"}));
  EXPECT_EQ(ph_.Word("niño", Locale::kSpanish),
            (PhonemeSeq{"n", "i", "NY", "o"}));
  EXPECT_EQ(ph_.Word("hola", Locale::kSpanish), (PhonemeSeq{"o", "l", "a"}));
  EXPECT_EQ(ph_.Word("perro", Locale::kSpanish),
            (PhonemeSeq{"p", "e", "RR", "o"}));
  EXPECT_EQ(ph_.Word("rosa", Locale::kSpanish),
            (PhonemeSeq{"RR", "o", "s", "a"}));
  EXPECT_EQ(ph_.Word("jamón", Locale::kSpanish),
            (PhonemeSeq{"x", "a", "m", "o", "n"}));
}

TEST_F(PhonemizerTest, InventorySizes) {
  EXPECT_EQ(ph_.Inventory(Locale::kEnglish).size(), 39u);
  EXPECT_EQ(ph_.Inventory(Locale::kSpanish).size(), 25u);
}

TEST_F(PhonemizerTest, SpanishPhonesStayInInventory) {
  Rng rng(5);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  for (int i = 0; i < 500; ++i) {
    std::string word;
    size_t len = 1 + rng.Below(10);
    for (size_t k = 0; k < len; ++k) word += alphabet[rng.Below(26)];
    for (const auto &p : ph_.Word(word, Locale::kSpanish)) {
      ASSERT_TRUE(ph_.Inventory(Locale::kSpanish).count(p)) << word << " " << p;
    }
  }
}

TEST_F(PhonemizerTest, SingleWordDiphoneCount) {
  // [K, AE, T] has two adjacent pairs.
  EXPECT_EQ(DiphoneCoverage({"cat"}, Locale::kEnglish, ph_), 2u);
}

TEST_F(PhonemizerTest, WordBoundariesBreakAdjacency) {
  // "cat cat" has the same diphones as "cat": no pair spans the space.
  EXPECT_EQ(DiphoneCoverage({"cat cat"}, Locale::kEnglish, ph_),
            DiphoneCoverage({"cat"}, Locale::kEnglish, ph_));
}

TEST_F(PhonemizerTest, CoverageMonotoneAndDuplicationInvariant) {
  std::vector<std::string> corpus = {"the cat sat", "a dog ran today"};
  size_t base = DiphoneCoverage(corpus, Locale::kEnglish, ph_);
  corpus.push_back("fresh words arrive");
  size_t extended = DiphoneCoverage(corpus, Locale::kEnglish, ph_);
  EXPECT_GE(extended, base);

  std::vector<std::string> doubled = corpus;
  doubled.insert(doubled.end(), corpus.begin(), corpus.end());
  EXPECT_EQ(DiphoneCoverage(doubled, Locale::kEnglish, ph_), extended);
}

}  // namespace
}  // namespace ttskit
