// tests/post-normalize-test.cc

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

#include <string>

#include "gtest/gtest.h"
#include "ttskit/seed-tree.h"
#include "ttskit/util.h"

namespace ttskit {
namespace {

class PostNormalizeTest : public ::testing::Test {
 protected:
  PostNormConfig en_ = PostNormConfig::ForLocale(Locale::kEnglish);
  PostNormConfig es_ = PostNormConfig::ForLocale(Locale::kSpanish);
};

TEST_F(PostNormalizeTest, StripsHyphensUnderscoresBrackets) {
  EXPECT_EQ(PostNormalize("step-by-step instructions", en_),
            "step by step instructions");
  EXPECT_EQ(PostNormalize("(note)", en_), "note");
  EXPECT_EQ(PostNormalize("a_b [c]", en_), "a b c");
}

TEST_F(PostNormalizeTest, ExpandsAcronymsAndNumbers) {
  EXPECT_EQ(PostNormalize("The GPU costs 45", en_),
            "The G P U costs forty five");
  EXPECT_EQ(PostNormalize("TV ads", en_), "T V ads");
  // Whitelisted and out-of-length tokens stay.
  EXPECT_EQ(PostNormalize("OK I A GPUs", en_), "OK I A GPUs");
}

TEST_F(PostNormalizeTest, NumberShapes) {
  EXPECT_EQ(PostNormalize("paid $301,000 now", en_),
            "paid $three hundred and one thousand now");
  EXPECT_EQ(PostNormalize("about 39.29 percent", en_),
            "about thirty nine point two nine percent");
  EXPECT_EQ(PostNormalize("un 93,45 por ciento", es_),
            "un noventa y tres coma cuarenta y cinco por ciento");
  EXPECT_EQ(PostNormalize("total 45.", en_), "total forty five.");
  EXPECT_EQ(PostNormalize("87% done", en_), "Eighty seven% done");
  // Leading zeros read digit by digit, and odd shapes spell their digits.
  EXPECT_EQ(PostNormalize("code 007", en_), "code zero zero seven");
  EXPECT_EQ(PostNormalize("at 13:59 sharp", en_),
            "at one three : five nine sharp");
}

TEST_F(PostNormalizeTest, NonContextualYearConversionIsKept) {
  // Deliberate limitation: years convert like any other number.
  EXPECT_EQ(PostNormalize("in 2023", en_), "in two thousand twenty three");
}

TEST_F(PostNormalizeTest, SentenceInitialCapitalization) {
  EXPECT_EQ(PostNormalize("45 dollars were paid", en_),
            "Forty five dollars were paid");
  EXPECT_EQ(PostNormalize("¿45 pesos?", es_), "¿Cuarenta y cinco pesos?");
  EXPECT_EQ(PostNormalize("lowercase stays", en_), "lowercase stays");
}

TEST_F(PostNormalizeTest, FixpointQueries) {
  EXPECT_TRUE(IsFixpoint("", en_));
  EXPECT_TRUE(IsFixpoint("plain words only", en_));
  EXPECT_FALSE(IsFixpoint("45", en_));
  EXPECT_FALSE(IsFixpoint("GPU", en_));
}

TEST_F(PostNormalizeTest, TotalOnArbitraryInput) {
  EXPECT_EQ(PostNormalize("", en_), "");
  EXPECT_EQ(PostNormalize("   \t\n ", en_), "");
  EXPECT_NO_THROW(PostNormalize("¡Órale! — 99 luftballons… 例え", es_));
}

TEST_F(PostNormalizeTest, IdempotentOnRandomInput) {
  Rng rng(99);
  const std::string alphabet =
      "abcdefgh ABCDEFGH 0123456789 -_()[].,!?%:;'\"áéñü¿¡ ";
  for (int iter = 0; iter < 500; ++iter) {
    std::string input;
    size_t len = rng.Below(80);
    for (size_t i = 0; i < len; ++i) input += alphabet[rng.Below(alphabet.size())];
    std::string once = PostNormalize(input, en_);
    ASSERT_EQ(PostNormalize(once, en_), once) << "input: " << input;
    for (char c : once) {
      ASSERT_FALSE(IsAsciiDigit(c)) << once;
      ASSERT_TRUE(c != '-' && c != '_' && c != '(' && c != ')' &&
                  c != '[' && c != ']')
          << once;
    }
  }
}

}  // namespace
}  // namespace ttskit
