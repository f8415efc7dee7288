// tests/entity-sampler-test.cc

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

#include <set>
#include <string>

#include "gtest/gtest.h"
#include "ttskit/post-normalize.h"
#include "ttskit/seed-tree.h"
#include "ttskit/util.h"

namespace ttskit {
namespace {

struct GoldenRow {
  SemioticClass cls;
  Locale loc;
  const char *surface;
  const char *normalized;
};

// Reference verbalization pairs, English. Case differences are not
// significant (the reference prints number words with capitals).
const GoldenRow kGoldenEnglish[] = {
    {SemioticClass::kAmount, Locale::kEnglish, "863k Canadian Dollars",
     "eight hundred and sixty three thousand Canadian Dollars"},
    {SemioticClass::kAmount, Locale::kEnglish, "29 USD",
     "twenty nine U S Dollars"},
    {SemioticClass::kAmount, Locale::kEnglish, "£723m",
     "seven hundred and twenty three million pounds"},
    {SemioticClass::kDate, Locale::kEnglish, "06/Jan/10", "January sixth ten"},
    {SemioticClass::kPersonWithSalutation, Locale::kEnglish,
     "Dr. Yvette Nelson", "Doctor Yvette Nelson"},
    {SemioticClass::kPersonWithSalutation, Locale::kEnglish,
     "Mr. Cameron Carter", "Mister Cameron Carter"},
    {SemioticClass::kPersonWithSalutation, Locale::kEnglish,
     "Mrs. Julia Thomas", "Missis Julia Thomas"},
    {SemioticClass::kEmail, Locale::kEnglish, "cbrwthomaswalker29@hotmail.com",
     "c b r w thomas walker two nine at hot mail dot com"},
    {SemioticClass::kEmail, Locale::kEnglish, "l51sonyasanders@mail.com",
     "l five one sonya sanders at mail dot com"},
    {SemioticClass::kPhoneNumber, Locale::kEnglish, "7854017402",
     "seven eight five, four zero one, seven four zero two"},
    {SemioticClass::kPhoneNumber, Locale::kEnglish, "+1-47859964121",
     "plus one, four seven eight five, nine nine six, four one two one"},
    {SemioticClass::kPercentage, Locale::kEnglish, "39.29%",
     "thirty nine point two nine percent"},
    {SemioticClass::kUrl, Locale::kEnglish, "http://though15.eu",
     "h t t p colon slash slash though one five dot e u"},
    {SemioticClass::kAddress, Locale::kEnglish, "Johnson Trail Plz KY 45287",
     "Johnson Trail Plaza Kentucky four five two eight seven"},
    {SemioticClass::kAddress, Locale::kEnglish,
     "Chen Inlet North Dakota 34101",
     "Chen Inlet North Dakota three four one zero one"},
    {SemioticClass::kTime, Locale::kEnglish, "13:59", "thirteen fifty nine"},
    {SemioticClass::kTime, Locale::kEnglish, "17:00",
     "seventeen hundred hours"},
    {SemioticClass::kTime, Locale::kEnglish, "02:34 PM",
     "two thirty four P M"},
    {SemioticClass::kTime, Locale::kEnglish, "11 o'clock", "eleven o clock"},
};

// Reference verbalization pairs, Spanish.
const GoldenRow kGoldenSpanish[] = {
    {SemioticClass::kAmount, Locale::kSpanish, "CA$572",
     "quinientos setenta y dos dólares canadienses"},
    {SemioticClass::kAmount, Locale::kSpanish, "A$485,986,561.71",
     "cuatrocientos ochenta y cinco millones novecientos ochenta y seis mil "
     "quinientos sesenta y uno con setenta y un centavos dólares "
     "australianos"},
    {SemioticClass::kAmount, Locale::kSpanish, "£723m",
     "setecientos veintitrés millones de libras"},
    {SemioticClass::kDate, Locale::kSpanish, "05/22/93",
     "veintidós de mayo de mil novecientos noventa y tres"},
    {SemioticClass::kDate, Locale::kSpanish, "02-Oct-1988",
     "dos de octubre de mil novecientos ochenta y ocho"},
    {SemioticClass::kDate, Locale::kSpanish, "08-04-2000",
     "ocho de abril de dos mil"},
    {SemioticClass::kPersonWithSalutation, Locale::kSpanish,
     "Prof. Edgardo Aragón Trujillo", "El Profesor Edgardo Aragón Trujillo"},
    {SemioticClass::kPersonWithSalutation, Locale::kSpanish,
     "Dr. Bernabé Quintanilla Cerezo", "El Doctor Bernabé Quintanilla Cerezo"},
    {SemioticClass::kPersonWithSalutation, Locale::kSpanish,
     "Sr. Rodolfo del Cid", "El Señor Rodolfo del Cid"},
    {SemioticClass::kEmail, Locale::kSpanish, "16rosaliaquesada@outlook.com",
     "uno seis rosalia quesada en outlook punto com"},
    {SemioticClass::kEmail, Locale::kSpanish, "ferreraclara36@outlook.com",
     "ferrera clara tres seis en outlook punto com"},
    {SemioticClass::kPhoneNumber, Locale::kSpanish, "4 835600765",
     "cuatro ocho tres, cinco seis cero, cero siete seis cinco"},
    {SemioticClass::kPhoneNumber, Locale::kSpanish, "4807 14 77 34",
     "cuatro ocho cero, siete uno cuatro, siete siete tres cuatro"},
    {SemioticClass::kPercentage, Locale::kSpanish, "69.76%",
     "sesenta y nueve punto setenta y seis por ciento"},
    {SemioticClass::kPercentage, Locale::kSpanish, "76%",
     "setenta y seis por ciento"},
    {SemioticClass::kUrl, Locale::kSpanish, "73corporis.gov",
     "siete tres corporis punto gov"},
    {SemioticClass::kAddress, Locale::kSpanish,
     "79 Pasaje de Claudio Jimenez Vlg Tarragona Colorado 11282",
     "siete nueve Pasaje de Claudio Jiménez Aldea Tarragona Colorado uno uno "
     "dos ocho dos"},
    {SemioticClass::kAddress, Locale::kSpanish,
     "Pasadizo Julián Bosch Louisiana 32198",
     "Pasadizo Julián Bosch Louisiana tres dos uno nueve ocho"},
    {SemioticClass::kTime, Locale::kSpanish, "09:20", "nueve veinte"},
    {SemioticClass::kTime, Locale::kSpanish, "07:59 pm",
     "siete cincuenta y nueve p m"},
    {SemioticClass::kTime, Locale::kSpanish, "las 2 en punto",
     "las dos en punto"},
};

class EntitySamplerTest : public ::testing::Test {
 protected:
  EntitySampler sampler_;
};

TEST_F(EntitySamplerTest, GoldenEnglishTable) {
  for (const auto &row : kGoldenEnglish) {
    EXPECT_EQ(FoldCase(sampler_.Verbalize(row.cls, row.loc, row.surface)),
              FoldCase(row.normalized))
        << row.surface;
  }
}

TEST_F(EntitySamplerTest, GoldenSpanishTable) {
  for (const auto &row : kGoldenSpanish) {
    EXPECT_EQ(FoldCase(sampler_.Verbalize(row.cls, row.loc, row.surface)),
              FoldCase(row.normalized))
        << row.surface;
  }
}

// Extra verbalization pairs seen in generated-script material.
TEST_F(EntitySamplerTest, AdditionalPairs) {
  EXPECT_EQ(sampler_.Verbalize(SemioticClass::kEmail, Locale::kEnglish,
                               "5.abigail.walker@yandex.com"),
            "five dot abigail dot walker at yandex dot com");
  EXPECT_EQ(sampler_.Verbalize(SemioticClass::kUrl, Locale::kSpanish,
                               "86corrupti.net"),
            "ocho seis corrupti punto net");
  EXPECT_EQ(sampler_.Verbalize(SemioticClass::kDate, Locale::kSpanish,
                               "02-01-1997"),
            "dos de enero de mil novecientos noventa y siete");
  EXPECT_EQ(FoldCase(sampler_.Verbalize(SemioticClass::kPercentage,
                                        Locale::kSpanish, "93,45%")),
            "noventa y tres coma cuarenta y cinco por ciento");
  EXPECT_EQ(FoldCase(sampler_.Verbalize(SemioticClass::kPersonWithSalutation,
                                        Locale::kEnglish, "Mrs. Julie Young")),
            FoldCase("Missis Julie Young"));
  // A surface that already carries the article keeps a single one.
  EXPECT_EQ(sampler_.Verbalize(SemioticClass::kPersonWithSalutation,
                               Locale::kSpanish, "El Dr. Johnson"),
            "El Doctor Johnson");
}

TEST_F(EntitySamplerTest, SampleIsDeterministic) {
  for (SemioticClass cls : AllSemioticClasses()) {
    for (Locale loc : {Locale::kEnglish, Locale::kSpanish}) {
      EntitySample a = sampler_.Sample(cls, loc, 1234);
      EntitySample b = sampler_.Sample(cls, loc, 1234);
      EXPECT_EQ(a.surface, b.surface);
      EXPECT_EQ(a.normalized, b.normalized);
      EXPECT_EQ(a.recipe_id, b.recipe_id);
    }
  }
}

TEST_F(EntitySamplerTest, SampleMatchesVerbalize) {
  for (SemioticClass cls : AllSemioticClasses()) {
    for (Locale loc : {Locale::kEnglish, Locale::kSpanish}) {
      for (uint64_t seed = 0; seed < 200; ++seed) {
        EntitySample s = sampler_.Sample(cls, loc, seed);
        EXPECT_EQ(sampler_.Verbalize(cls, loc, s.surface), s.normalized)
            << SemioticClassName(cls) << " " << s.surface;
      }
    }
  }
}

void ExpectSpokenAlphabet(const std::string &s) {
  static const std::string kForbidden = "-_()[]@/:%";
  for (char c : s) {
    ASSERT_FALSE(IsAsciiDigit(c)) << s;
    ASSERT_EQ(kForbidden.find(c), std::string::npos) << s << " has " << c;
  }
}

TEST_F(EntitySamplerTest, NormalizedAlphabetAndFixpoint) {
  PostNormConfig en_cfg = PostNormConfig::ForLocale(Locale::kEnglish);
  PostNormConfig es_cfg = PostNormConfig::ForLocale(Locale::kSpanish);
  for (SemioticClass cls : AllSemioticClasses()) {
    for (Locale loc : {Locale::kEnglish, Locale::kSpanish}) {
      const PostNormConfig &cfg =
          loc == Locale::kEnglish ? en_cfg : es_cfg;
      for (uint64_t seed = 0; seed < 100; ++seed) {
        EntitySample s = sampler_.Sample(cls, loc, seed);
        ASSERT_FALSE(s.surface.empty());
        ExpectSpokenAlphabet(s.normalized);
        ASSERT_TRUE(IsFixpoint(s.normalized, cfg))
            << s.normalized << " -> " << PostNormalize(s.normalized, cfg);
      }
    }
  }
}

TEST_F(EntitySamplerTest, DiversityFloor) {
  // 10,000 draws of one class and locale must produce at least 100
  // distinct surface forms.
  std::set<std::string> surfaces;
  for (uint64_t seed = 0; seed < 10000; ++seed) {
    surfaces.insert(
        sampler_.Sample(SemioticClass::kEmail, Locale::kEnglish, seed)
            .surface);
  }
  EXPECT_GE(surfaces.size(), 100u);
}

TEST_F(EntitySamplerTest, UnparseableSurfacesRaise) {
  EXPECT_THROW(
      sampler_.Verbalize(SemioticClass::kEmail, Locale::kEnglish, "no-at"),
      VerbalizeError);
  EXPECT_THROW(
      sampler_.Verbalize(SemioticClass::kDate, Locale::kEnglish, "13 o'clock x"),
      VerbalizeError);
  EXPECT_THROW(
      sampler_.Verbalize(SemioticClass::kPhoneNumber, Locale::kEnglish,
                         "call me"),
      VerbalizeError);
  EXPECT_THROW(sampler_.Verbalize(SemioticClass::kPercentage, Locale::kEnglish,
                                  "45 percent"),
               VerbalizeError);
  EXPECT_THROW(sampler_.Verbalize(SemioticClass::kAmount, Locale::kEnglish,
                                  "123"),
               VerbalizeError);
  EXPECT_THROW(sampler_.Verbalize(SemioticClass::kPersonWithSalutation,
                                  Locale::kEnglish, "Captain Kirk"),
               VerbalizeError);
  try {
    sampler_.Verbalize(SemioticClass::kEmail, Locale::kEnglish, "broken");
    FAIL() << "expected VerbalizeError";
  } catch (const VerbalizeError &e) {
    // The error names the class and what the grammar expected.
    EXPECT_NE(std::string(e.what()).find("email"), std::string::npos);
  }
}

// Arbitrary surfaces either verbalize or raise VerbalizeError; nothing else
// may escape (no raw integer-conversion exceptions on oversized fields).
TEST_F(EntitySamplerTest, FuzzOnlyVerbalizeErrorsEscape) {
  Rng rng(31337);
  const std::string alphabet =
      "abcXYZ0123456789 .:-/@%$£+,'()ñé日";
  for (int iter = 0; iter < 4000; ++iter) {
    std::string junk;
    size_t len = 1 + rng.Below(24);
    for (size_t i = 0; i < len; ++i) junk += alphabet[rng.Below(alphabet.size())];
    // Digit-heavy shapes hit the numeric parsers hardest.
    if (iter % 3 == 0) {
      junk = std::to_string(rng.NextU64()) +
             std::string(1, "-/.:,"[rng.Below(5)]) +
             std::to_string(rng.NextU64());
    }
    for (SemioticClass cls : AllSemioticClasses()) {
      for (Locale loc : {Locale::kEnglish, Locale::kSpanish}) {
        try {
          sampler_.Verbalize(cls, loc, junk);
        } catch (const VerbalizeError &) {
          // expected for unparseable surfaces
        } catch (const std::exception &e) {
          FAIL() << SemioticClassName(cls) << "/" << LocaleCode(loc) << " \""
                 << junk << "\": " << e.what();
        }
      }
    }
  }
}

// Date surfaces that are ambiguous between day-first and month-first resolve
// by locale convention; an impossible month forces the swap.
TEST_F(EntitySamplerTest, DateLocaleConvention) {
  EXPECT_EQ(FoldCase(sampler_.Verbalize(SemioticClass::kDate, Locale::kEnglish,
                                        "02-01-2005")),
            FoldCase("February first two thousand five"));
  EXPECT_EQ(sampler_.Verbalize(SemioticClass::kDate, Locale::kSpanish,
                               "02-01-2005"),
            "dos de enero de dos mil cinco");
  EXPECT_EQ(FoldCase(sampler_.Verbalize(SemioticClass::kDate, Locale::kEnglish,
                                        "22/05/97")),
            FoldCase("May twenty second ninety seven"));
}

TEST_F(EntitySamplerTest, PhoneGrouping) {
  // Lengths other than 10 and 11 keep the right-anchored grouping rule.
  EXPECT_EQ(sampler_.Verbalize(SemioticClass::kPhoneNumber, Locale::kEnglish,
                               "123456"),
            "one two, three four five six");
  EXPECT_EQ(sampler_.Verbalize(SemioticClass::kPhoneNumber, Locale::kEnglish,
                               "1234567"),
            "one two three, four five six seven");
  EXPECT_EQ(sampler_.Verbalize(SemioticClass::kPhoneNumber, Locale::kEnglish,
                               "123456789"),
            "one two, three four five, six seven eight nine");
  EXPECT_EQ(sampler_.Verbalize(SemioticClass::kPhoneNumber, Locale::kEnglish,
                               "1234"),
            "one two three four");
}

TEST_F(EntitySamplerTest, RecipeIdsAreStable) {
  EntitySample s =
      sampler_.Sample(SemioticClass::kPhoneNumber, Locale::kEnglish, 7);
  EXPECT_EQ(s.recipe_id.rfind("phone.en.", 0), 0u) << s.recipe_id;
  EXPECT_EQ(s.seed, 7u);
}

}  // namespace
}  // namespace ttskit
