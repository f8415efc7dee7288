// tests/pipeline-test.cc

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

#include "ttskit/pipeline.h"

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"
#include "ttskit/post-normalize.h"

namespace ttskit {
namespace {

namespace fs = std::filesystem;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    base_ = fs::temp_directory_path() /
            ("ttskit-pipeline-" +
             std::to_string(
                 ::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()
                       ->current_test_info()
                       ->name());
    fs::remove_all(base_);
    fs::create_directories(base_);
  }
  void TearDown() override { fs::remove_all(base_); }

  PipelineConfig SmallConfig(uint64_t seed = 42) {
    PipelineConfig config;
    config.seed = seed;
    config.dataset_size = 12;
    config.use_mock = true;
    config.languages = {Locale::kEnglish, Locale::kSpanish};
    config.domains = {"Finance", "Healthcare"};
    config.keyphrase_pool_min = 4;
    return config;
  }

  std::string Dir(const std::string &name) { return (base_ / name).string(); }

  fs::path base_;
};

TEST_F(PipelineTest, GenerateProducesValidRecords) {
  Manifest m = RunGenerate(SmallConfig(), Dir("run"));
  ASSERT_EQ(m.records.size(), 12u);
  PostNormConfig en = PostNormConfig::ForLocale(Locale::kEnglish);
  PostNormConfig es = PostNormConfig::ForLocale(Locale::kSpanish);
  for (const auto &r : m.records) {
    size_t words = CountWords(r.script);
    EXPECT_GE(words, 5u) << r.script;
    EXPECT_LE(words, 50u) << r.script;
    EXPECT_FALSE(r.keyphrases.empty());
    for (const auto &k : r.keyphrases) {
      EXPECT_TRUE(ContainsCaseInsensitive(r.script, k)) << r.script;
    }
    for (const auto &e : r.entities) {
      EXPECT_NE(r.script.find(e.surface), std::string::npos);
      EXPECT_EQ(r.normalized_script.find(e.surface), std::string::npos)
          << r.normalized_script;
    }
    const PostNormConfig &cfg = r.language == Locale::kEnglish ? en : es;
    EXPECT_TRUE(IsFixpoint(r.normalized_script, cfg)) << r.normalized_script;
  }
  EXPECT_TRUE(fs::exists(Dir("run") + "/corpus.jsonl"));
  EXPECT_TRUE(fs::exists(Dir("run") + "/manifest.json"));
  EXPECT_TRUE(fs::exists(Dir("run") + "/keyphrases.tsv"));
}

TEST_F(PipelineTest, DeterministicAcrossRuns) {
  RunGenerate(SmallConfig(7), Dir("a"));
  RunGenerate(SmallConfig(7), Dir("b"));
  EXPECT_EQ(ReadFile(Dir("a") + "/corpus.jsonl"),
            ReadFile(Dir("b") + "/corpus.jsonl"));
  RunGenerate(SmallConfig(8), Dir("c"));
  EXPECT_NE(ReadFile(Dir("a") + "/corpus.jsonl"),
            ReadFile(Dir("c") + "/corpus.jsonl"));
}

TEST_F(PipelineTest, ParallelMatchesSequential) {
  PipelineConfig seq = SmallConfig(11);
  RunGenerate(seq, Dir("seq"));
  PipelineConfig par = SmallConfig(11);
  par.jobs = 4;
  RunGenerate(par, Dir("par"));
  // jobs is not part of the corpus-shaping config; outputs must match.
  EXPECT_EQ(ReadFile(Dir("seq") + "/corpus.jsonl"),
            ReadFile(Dir("par") + "/corpus.jsonl"));
}

TEST_F(PipelineTest, ResumeProducesIdenticalCorpus) {
  PipelineConfig config = SmallConfig(21);
  RunGenerate(config, Dir("full"));

  // Simulate an interrupted run: keep the config snapshot, keyphrase
  // snapshot and the first five corpus lines only.
  RunGenerate(config, Dir("partial"));
  {
    auto lines = Split(ReadFile(Dir("partial") + "/corpus.jsonl"), '\n');
    std::string head;
    for (size_t i = 0; i < 5; ++i) head += lines[i] + "\n";
    WriteFile(Dir("partial") + "/corpus.jsonl", head);
    fs::remove(Dir("partial") + "/manifest.json");
  }
  RunGenerate(config, Dir("partial"));
  EXPECT_EQ(ReadFile(Dir("partial") + "/corpus.jsonl"),
            ReadFile(Dir("full") + "/corpus.jsonl"));
}

TEST_F(PipelineTest, MismatchedConfigInRunDirRejected) {
  RunGenerate(SmallConfig(5), Dir("run"));
  PipelineConfig other = SmallConfig(6);
  EXPECT_THROW(RunGenerate(other, Dir("run")), ConfigError);
}

TEST_F(PipelineTest, BaselineModeHasNoInjection) {
  PipelineConfig config = SmallConfig(9);
  config.mode = PipelineMode::kBaseline;
  Manifest m = RunGenerate(config, Dir("base"));
  for (const auto &r : m.records) {
    EXPECT_TRUE(r.keyphrases.empty());
    EXPECT_TRUE(r.entities.empty());
  }
  EXPECT_FALSE(fs::exists(Dir("base") + "/keyphrases.tsv"));
}

TEST_F(PipelineTest, RecordJsonRoundTripAndStrictMode) {
  Manifest m = RunGenerate(SmallConfig(3), Dir("run"));
  nlohmann::json j = RecordToJson(m.records[0]);
  ScriptRecord back = RecordFromJson(j, /*strict=*/true);
  EXPECT_EQ(RecordToJson(back), j);

  j["surprise"] = 1;
  EXPECT_THROW(RecordFromJson(j, /*strict=*/true), ParseError);
  EXPECT_NO_THROW(RecordFromJson(j, /*strict=*/false));
  j.erase("script");
  EXPECT_THROW(RecordFromJson(j, /*strict=*/false), ParseError);
}

TEST_F(PipelineTest, SynthesizeWritesWavsAndIsIdempotent) {
  PipelineConfig config = SmallConfig(13);
  config.dataset_size = 6;
  RunGenerate(config, Dir("run"));
  PipelineConfig overrides;
  overrides.use_mock = true;
  Manifest m = RunSynthesize(Dir("run"), overrides);
  EXPECT_TRUE(m.errors.empty());
  for (const auto &r : m.records) {
    ASSERT_FALSE(r.audio_path.empty());
    EXPECT_TRUE(fs::exists(Dir("run") + "/" + r.audio_path));
    ASSERT_TRUE(m.snr_db.count(r.id));
    EXPECT_GT(m.snr_db.at(r.id), 0.0);
  }
  auto mtime = fs::last_write_time(Dir("run") + "/" + m.records[0].audio_path);
  Manifest again = RunSynthesize(Dir("run"), overrides);
  EXPECT_EQ(fs::last_write_time(Dir("run") + "/" + m.records[0].audio_path),
            mtime);
  EXPECT_EQ(again.records.size(), m.records.size());
}

TEST_F(PipelineTest, SynthesizeWithoutManifestFails) {
  PipelineConfig overrides;
  overrides.use_mock = true;
  EXPECT_THROW(RunSynthesize(Dir("nonexistent"), overrides), IoError);
}

TEST_F(PipelineTest, EvaluateSingleManifest) {
  PipelineConfig config = SmallConfig(17);
  config.dataset_size = 10;
  RunGenerate(config, Dir("run"));
  PipelineConfig overrides;
  overrides.use_mock = true;
  RunSynthesize(Dir("run"), overrides);

  EvaluateOptions options;
  nlohmann::json report = RunEvaluate({Dir("run")}, options);
  ASSERT_EQ(report["datasets"].size(), 1u);
  const auto &langs = report["datasets"][0]["languages"];
  ASSERT_TRUE(langs.contains("en"));
  ASSERT_TRUE(langs.contains("es"));
  const auto &en = langs["en"];
  EXPECT_GT(en["records"].get<size_t>(), 0u);
  EXPECT_GT(en["ttr"].get<double>(), 0.0);
  EXPECT_GT(en["mattr"].get<double>(), 0.0);
  EXPECT_GT(en["diphone_coverage"].get<size_t>(), 0u);
  ASSERT_FALSE(en["diphone_curve"].empty());
  // Curve is non-decreasing.
  size_t prev = 0;
  for (const auto &point : en["diphone_curve"]) {
    size_t cov = point[1].get<size_t>();
    EXPECT_GE(cov, prev);
    prev = cov;
  }
  EXPECT_FALSE(en["audio"]["mean_snr_db"].is_null());
  EXPECT_FALSE(en["audio"]["wer_percent"].is_null());
  EXPECT_TRUE(en["audio"]["mos"].is_null());
  std::string table = RenderReportTable(report);
  EXPECT_NE(table.find("Diphone Coverage"), std::string::npos);
}

TEST_F(PipelineTest, EvaluateComparesTwoManifests) {
  PipelineConfig ours = SmallConfig(19);
  ours.dataset_size = 10;
  RunGenerate(ours, Dir("ours"));
  PipelineConfig baseline = SmallConfig(19);
  baseline.dataset_size = 10;
  baseline.mode = PipelineMode::kBaseline;
  RunGenerate(baseline, Dir("baseline"));

  nlohmann::json report = RunEvaluate({Dir("ours"), Dir("baseline")}, {});
  ASSERT_EQ(report["datasets"].size(), 2u);
  EXPECT_EQ(report["datasets"][0]["mode"], "ours");
  EXPECT_EQ(report["datasets"][1]["mode"], "baseline");
  std::string table = RenderReportTable(report);
  EXPECT_NE(table.find("ours/en"), std::string::npos);
  EXPECT_NE(table.find("baseline/en"), std::string::npos);
}

TEST_F(PipelineTest, EvaluateTinyCorpusMarksSimilarityUnavailable) {
  PipelineConfig config = SmallConfig(23);
  config.dataset_size = 1;
  config.languages = {Locale::kEnglish};
  RunGenerate(config, Dir("tiny"));
  nlohmann::json report = RunEvaluate({Dir("tiny")}, {});
  EXPECT_TRUE(report["datasets"][0]["languages"]["en"]["similarity"].is_null());
}

TEST_F(PipelineTest, EvaluateGroundTruthAccuracy) {
  PipelineConfig config = SmallConfig(29);
  config.dataset_size = 8;
  config.languages = {Locale::kEnglish};
  Manifest m = RunGenerate(config, Dir("run"));

  // Ground truth equals the pipeline output except for two planted edits.
  std::string truth;
  for (size_t i = 0; i < m.records.size(); ++i) {
    std::string text = m.records[i].normalized_script;
    if (i < 2) text += " planted difference";
    truth += m.records[i].id + "\t" + text + "\n";
  }
  WriteFile(Dir("truth.tsv"), truth);
  EvaluateOptions options;
  options.ground_truth_file = Dir("truth.tsv");
  nlohmann::json report = RunEvaluate({Dir("run")}, options);
  const auto &acc =
      report["datasets"][0]["languages"]["en"]["normalization_accuracy"];
  ASSERT_FALSE(acc.is_null());
  EXPECT_DOUBLE_EQ(acc["accuracy"].get<double>(), 6.0 / 8.0);
  EXPECT_EQ(acc["mismatches"].size(), 2u);
}

TEST_F(PipelineTest, ConfigValidation) {
  PipelineConfig config;
  config.dataset_size = 0;
  EXPECT_THROW(config.Validate(), ConfigError);
  config = PipelineConfig();
  config.temperature = 0;
  EXPECT_THROW(config.Validate(), ConfigError);
  config = PipelineConfig();
  config.entities_per_script = 7;
  EXPECT_THROW(config.Validate(), ConfigError);
  config = PipelineConfig();
  EXPECT_NO_THROW(config.Validate());
}

}  // namespace
}  // namespace ttskit
