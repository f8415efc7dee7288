// tests/script-generator-test.cc

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

#include "ttskit/script-generator.h"

#include <deque>

#include "gtest/gtest.h"
#include "ttskit/post-normalize.h"

namespace ttskit {
namespace {

// Serves scripted responses in order; runs dry loudly.
class QueueLlm : public LlmClient {
 public:
  void Push(const std::string &text) {
    queue_.push_back("{\"text\": \"" + text + "\"}");
  }

 protected:
  GenerationResponse GenerateOnce(const GenerationRequest &) override {
    if (queue_.empty()) {
      throw GatewayError(GatewayErrorKind::kHttp, "queue exhausted");
    }
    GenerationResponse resp{queue_.front(), std::nullopt};
    queue_.pop_front();
    return resp;
  }

 private:
  std::deque<std::string> queue_;
};

EntitySample MakeEntity(const std::string &surface,
                        const std::string &normalized) {
  EntitySample e;
  e.cls = SemioticClass::kPersonWithSalutation;
  e.locale = Locale::kEnglish;
  e.surface = surface;
  e.normalized = normalized;
  e.recipe_id = "test";
  return e;
}

TEST(BuildPrompt, OursTemplates) {
  EntitySample phone = MakeEntity("7854017402", "unused");
  EXPECT_EQ(
      BuildPrompt(SentenceType::kStatement, PipelineMode::kOurs, "Finance",
                  Locale::kEnglish, {"asset finance", "mortgage"}, {phone}),
      "Construct one sentence in English language in Finance domain with the "
      "following words: asset finance, mortgage. The following entities "
      "should also be present in the text: 7854017402.");
  EXPECT_EQ(
      BuildPrompt(SentenceType::kPhrase, PipelineMode::kOurs, "Retail",
                  Locale::kSpanish, {"ofertas", "precios"}, {}),
      "Construct a short phrase in Spanish language in Retail domain with "
      "the following words: ofertas, precios. The phrase should contain "
      "about 5 to 7 words. The phrase should not have any numbers or dates. "
      "It should be strictly a phrase and not a sentence.");
  std::string utterance =
      BuildPrompt(SentenceType::kUtterance, PipelineMode::kOurs, "Banking",
                  Locale::kEnglish, {"loans"}, {phone});
  EXPECT_NE(utterance.find("conversation between two people"),
            std::string::npos);
  EXPECT_NE(utterance.find("containing the following words: loans."),
            std::string::npos);
}

TEST(BuildPrompt, BaselineTemplates) {
  std::string p = BuildPrompt(SentenceType::kStatement, PipelineMode::kBaseline,
                              "Finance", Locale::kEnglish, {}, {});
  EXPECT_EQ(p,
            "Construct one sentence in English language in Finance domain. I "
            "am well aware of English language, so do not translate it.");
  EXPECT_EQ(p.find("following words"), std::string::npos);
  EXPECT_EQ(p.find("entities"), std::string::npos);

  std::string q = BuildPrompt(SentenceType::kQuestion, PipelineMode::kBaseline,
                              "Retail", Locale::kSpanish, {}, {});
  EXPECT_NE(q.find("should be a question"), std::string::npos);
  EXPECT_NE(q.find("Spanish"), std::string::npos);
}

TEST(BuildPrompt, PhraseRejectsEntities) {
  EntitySample e = MakeEntity("45%", "forty five percent");
  EXPECT_THROW(BuildPrompt(SentenceType::kPhrase, PipelineMode::kOurs, "X",
                           Locale::kEnglish, {"a"}, {e}),
               Error);
  EXPECT_THROW(BuildPrompt(SentenceType::kStatement, PipelineMode::kBaseline,
                           "X", Locale::kEnglish, {"a"}, {}),
               Error);
}

TEST(Substitute, ReplacesSurfaces) {
  EntitySample phone = MakeEntity(
      "7854017402", "seven eight five, four zero one, seven four zero two");
  EXPECT_EQ(SubstituteNormalized("Call 7854017402 now", {phone}),
            "Call seven eight five, four zero one, seven four zero two now");
  EXPECT_EQ(SubstituteNormalized("no entities here", {}), "no entities here");
}

TEST(Substitute, LongestSurfaceFirst) {
  EntitySample shorter = MakeEntity("10:00", "ten o clock");
  EntitySample longer = MakeEntity("10:00 PM", "ten P M");
  EXPECT_EQ(
      SubstituteNormalized("open 10:00 and close 10:00 PM", {shorter, longer}),
      "open ten o clock and close ten P M");
}

TEST(Substitute, MissingSurfaceIsAnError) {
  EntitySample e = MakeEntity("absent", "words");
  try {
    SubstituteNormalized("nothing here", {e});
    FAIL() << "expected error";
  } catch (const Error &err) {
    EXPECT_NE(std::string(err.what()).find("absent"), std::string::npos);
  }
}

TEST(GenerateScript, LengthFilterRedrawsWithFreshSeed) {
  QueueLlm llm;
  llm.Push("Too short now.");
  llm.Push("This acceptable sentence has exactly eight words total.");
  ScriptRequest req;
  req.id = "r1";
  req.domain = "Finance";
  req.type = SentenceType::kStatement;
  req.mode = PipelineMode::kOurs;
  SeedTree seeds(42);
  ScriptGenResult result = GenerateScript(&llm, req, {}, &seeds);
  EXPECT_EQ(result.record.script,
            "This acceptable sentence has exactly eight words total.");
  EXPECT_EQ(result.rejects.size(), 1u);
  // One secondary seed per attempt.
  EXPECT_EQ(seeds.draw_count(), 2u);
}

TEST(GenerateScript, FiftyOneWordsRejected) {
  std::string long_sentence;
  for (int i = 0; i < 51; ++i) long_sentence += "word ";
  QueueLlm llm;
  llm.Push(Trim(long_sentence));
  llm.Push("Fallback sentence with a comfortable word count here.");
  ScriptRequest req;
  req.id = "r2";
  req.domain = "Retail";
  SeedTree seeds(1);
  ScriptGenResult result = GenerateScript(&llm, req, {}, &seeds);
  EXPECT_EQ(result.rejects.size(), 1u);
  EXPECT_NE(result.rejects[0].find("length filter (51 words)"),
            std::string::npos);
}

TEST(GenerateScript, SubstitutesNormalizedEntity) {
  QueueLlm llm;
  llm.Push("Mrs. Julie Young was blown away by the sheer size of the "
           "aircraft and the luxurious amenities!");
  ScriptRequest req;
  req.id = "r3";
  req.domain = "Travel";
  req.entities.push_back(
      MakeEntity("Mrs. Julie Young", "Missis Julie Young"));
  SeedTree seeds(9);
  ScriptGenResult result = GenerateScript(&llm, req, {}, &seeds);
  EXPECT_NE(result.record.normalized_script.find("Missis Julie Young"),
            std::string::npos);
  EXPECT_EQ(result.record.normalized_script.find("Mrs."), std::string::npos);
}

TEST(GenerateScript, EntityMustAppearExactlyOnce) {
  QueueLlm llm;
  llm.Push("Dial 555 then 555 again for the service desk today.");
  llm.Push("Dial 555 for the service desk right away today.");
  ScriptRequest req;
  req.id = "r4";
  req.domain = "Telecom";
  req.entities.push_back(MakeEntity("555", "five five five"));
  SeedTree seeds(2);
  ScriptGenResult result = GenerateScript(&llm, req, {}, &seeds);
  EXPECT_EQ(result.rejects.size(), 1u);
  EXPECT_NE(result.record.normalized_script.find("five five five"),
            std::string::npos);
}

TEST(GenerateScript, KeyphraseModes) {
  ScriptRequest req;
  req.id = "r5";
  req.domain = "Finance";
  req.keyphrases = {"unusual phrase"};

  {
    QueueLlm llm;
    llm.Push("A sentence without the requested wording at all here.");
    SeedTree seeds(3);
    ScriptGenResult result = GenerateScript(&llm, req, {}, &seeds);
    ASSERT_EQ(result.warnings.size(), 1u);
    EXPECT_NE(result.warnings[0].find("unusual phrase"), std::string::npos);
  }
  {
    QueueLlm llm;
    llm.Push("A sentence without the requested wording at all here.");
    llm.Push("This unusual phrase sentence satisfies the strict check fine.");
    ScriptGenOptions strict;
    strict.strict_keyphrases = true;
    SeedTree seeds(3);
    ScriptGenResult result = GenerateScript(&llm, req, strict, &seeds);
    EXPECT_TRUE(result.warnings.empty());
    EXPECT_EQ(result.rejects.size(), 1u);
  }
}

TEST(GenerateScript, RetryBudgetExhaustion) {
  QueueLlm llm;
  for (int i = 0; i < 10; ++i) llm.Push("Tiny.");
  ScriptRequest req;
  req.id = "r6";
  req.domain = "Energy";
  ScriptGenOptions options;
  options.retry_budget = 3;
  SeedTree seeds(4);
  EXPECT_THROW(GenerateScript(&llm, req, options, &seeds), Error);
}

TEST(GenerateScript, DeterministicWithTemplateMock) {
  auto run = [] {
    MockLlm llm;
    ScriptRequest req;
    req.id = "r7";
    req.domain = "Healthcare";
    req.language = Locale::kEnglish;
    req.type = SentenceType::kQuestion;
    req.keyphrases = {"patient care", "clinic visits"};
    req.entities.push_back(MakeEntity("45%", "forty five percent"));
    SeedTree seeds(123);
    return GenerateScript(&llm, req, {}, &seeds).record;
  };
  ScriptRecord a = run();
  ScriptRecord b = run();
  EXPECT_EQ(a.script, b.script);
  EXPECT_EQ(a.normalized_script, b.normalized_script);
  size_t words = CountWords(a.script);
  EXPECT_GE(words, 5u);
  EXPECT_LE(words, 50u);
  EXPECT_NE(a.script.find("patient care"), std::string::npos);
  EXPECT_NE(a.script.find("45%"), std::string::npos);
  EXPECT_EQ(a.normalized_script.find("45%"), std::string::npos);
  EXPECT_NE(a.normalized_script.find("forty five percent"),
            std::string::npos);
}

TEST(CountWords, WhitespaceTokens) {
  EXPECT_EQ(CountWords("  one two   three "), 3u);
  EXPECT_EQ(CountWords(""), 0u);
  EXPECT_EQ(CountWords("hyphen-stays one"), 2u);
}

}  // namespace
}  // namespace ttskit
