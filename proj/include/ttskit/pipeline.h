// include/ttskit/pipeline.h

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

#ifndef TTSKIT_PIPELINE_H_
#define TTSKIT_PIPELINE_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ttskit/audio-clients.h"
#include "ttskit/keyphrase-store.h"
#include "ttskit/llm-client.h"
#include "ttskit/script-generator.h"

namespace ttskit {

struct PipelineConfig {
  uint64_t seed = 42;
  std::vector<Locale> languages = {Locale::kEnglish};
  std::vector<std::string> domains;          // empty: the shipped default 16
  std::vector<SentenceType> sentence_types;  // empty: all five
  size_t entities_per_script = 1;            // 0..3
  size_t keyphrases_per_script = 2;
  size_t dataset_size = 100;
  size_t min_words = 5;
  size_t max_words = 50;
  double temperature = 1.2;
  double top_p = 0.9;
  PipelineMode mode = PipelineMode::kOurs;
  bool use_mock = false;
  bool strict_keyphrases = false;
  int retry_budget = 8;
  int jobs = 1;
  // Minimum phrases replenished per (domain, language) group before
  // generation starts.
  size_t keyphrase_pool_min = 12;
  std::string llm_endpoint;
  std::string tts_endpoint;
  std::string asr_endpoint;
  std::string tone_endpoint;
  std::string keyphrase_store_path;  // optional preload
  std::string voice = "female";
  std::string reference_audio;  // live mode reference WAV

  void Validate() const;
  nlohmann::json ToJson() const;
  static PipelineConfig FromJson(const nlohmann::json &j);

  std::vector<std::string> EffectiveDomains() const;
  std::vector<SentenceType> EffectiveSentenceTypes() const;
};

// --------------------------------------------------------------- records

nlohmann::json RecordToJson(const ScriptRecord &record);
// Strict mode rejects unknown fields.
ScriptRecord RecordFromJson(const nlohmann::json &j, bool strict = false);

// --------------------------------------------------------------- corpora

// On-disk layout of one run directory:
//   config.json      - config snapshot, written first (resume guard)
//   corpus.jsonl     - one record per line, appended as records finish
//   keyphrases.tsv   - store snapshot after replenishment
//   rejects.log      - rejected drafts and warnings, with reasons
//   manifest.json    - config + seed + per-record entries, written last
//   <record-id>.wav  - synthesized audio next to the manifest
struct Manifest {
  PipelineConfig config;
  std::vector<ScriptRecord> records;
  // Per-record audio info keyed by record id.
  std::map<std::string, double> snr_db;
  std::vector<std::string> errors;

  static Manifest Load(const std::string &dir);
  void Save(const std::string &dir) const;
};

// Generates the corpus (round-robin over language, domain and sentence-type
// cells; per-record seeds derived by record index). An interrupted run
// resumes from the existing corpus.jsonl as long as the config snapshot
// matches. Returns the manifest it wrote.
Manifest RunGenerate(const PipelineConfig &config, const std::string &out_dir,
                     LlmClient *llm = nullptr);

// Synthesizes one WAV per record (skipping records whose audio already
// exists), stores SNR per record, and rewrites the manifest. Per-record
// synthesis failures are recorded and the run continues.
Manifest RunSynthesize(const std::string &dir, const PipelineConfig &overrides,
                       TtsClient *tts = nullptr,
                       ToneConverterClient *tone = nullptr);

// --------------------------------------------------------------- reports

struct EvaluateOptions {
  bool use_mock = true;
  bool strict_schema = false;
  std::string asr_endpoint;
  std::string mos_file;           // JSON {record id: score}
  std::string ground_truth_file;  // TSV: record id <TAB> corrected text
  bool ignore_commas = true;      // comma exemption for accuracy scoring
  size_t mattr_window = 100;
  int curve_steps = 10;
};

// Metric report for corpora; with several manifests the JSON and the text
// rendering place the datasets side by side.
nlohmann::json RunEvaluate(const std::vector<std::string> &manifest_dirs,
                           const EvaluateOptions &options);

std::string RenderReportTable(const nlohmann::json &report);

}  // namespace ttskit

#endif  // TTSKIT_PIPELINE_H_
