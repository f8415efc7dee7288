// include/ttskit/script-generator.h

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

#ifndef TTSKIT_SCRIPT_GENERATOR_H_
#define TTSKIT_SCRIPT_GENERATOR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ttskit/entity-sampler.h"
#include "ttskit/llm-client.h"
#include "ttskit/locale.h"
#include "ttskit/seed-tree.h"

namespace ttskit {

enum class SentenceType {
  kStatement,
  kExclamation,
  kQuestion,
  kPhrase,
  kUtterance,
};

std::string SentenceTypeName(SentenceType type);
SentenceType ParseSentenceType(std::string_view name);
const std::vector<SentenceType> &AllSentenceTypes();

enum class PipelineMode {
  kOurs,      // keyphrase and entity infusion
  kBaseline,  // direct prompting
};

struct ScriptRecord {
  std::string id;
  std::string domain;
  std::string subdomain;
  Locale language = Locale::kEnglish;
  SentenceType sentence_type = SentenceType::kStatement;
  std::vector<std::string> keyphrases;
  std::vector<EntitySample> entities;
  std::string script;
  std::string normalized_script;
  std::string audio_path;  // filled by synthesis
  uint64_t seed = 0;
};

// The exact prompt template for a sentence type and pipeline mode with the
// slots filled. Keyphrases and entity surfaces are joined with ", ".
// Throws ttskit::Error when the Phrase type is given entities, or when
// baseline mode is given keyphrases or entities.
std::string BuildPrompt(SentenceType type, PipelineMode mode,
                        std::string_view domain, Locale language,
                        const std::vector<std::string> &keyphrases,
                        const std::vector<EntitySample> &entities);

// Replaces each entity surface with its normalized form, longest surface
// first so a shorter surface cannot clobber a longer one that contains it.
// Throws ttskit::Error naming any surface missing from the script.
std::string SubstituteNormalized(std::string_view script,
                                 const std::vector<EntitySample> &entities);

// Whitespace-token count after trimming.
size_t CountWords(std::string_view text);

struct ScriptGenOptions {
  size_t min_words = 5;
  size_t max_words = 50;
  int retry_budget = 8;
  // Strict mode fails a record whose keyphrases the model dropped; lenient
  // mode keeps it and records a warning (models paraphrase).
  bool strict_keyphrases = false;
  double temperature = 1.2;
  double top_p = 0.9;
};

struct ScriptRequest {
  std::string id;
  std::string domain;
  std::string subdomain;
  Locale language = Locale::kEnglish;
  SentenceType type = SentenceType::kStatement;
  PipelineMode mode = PipelineMode::kOurs;
  std::vector<std::string> keyphrases;
  std::vector<EntitySample> entities;
};

struct ScriptGenResult {
  ScriptRecord record;
  std::vector<std::string> warnings;  // lenient-mode keyphrase misses
  std::vector<std::string> rejects;   // rejected drafts, with reasons
};

// Prompts the model, filters by word count, verifies entity presence
// (exactly once per surface), substitutes normalized forms and runs the
// post-processing normalizer. Length and entity failures redraw with the
// next secondary seed until the retry budget runs out (then throws).
ScriptGenResult GenerateScript(LlmClient *llm, const ScriptRequest &request,
                               const ScriptGenOptions &options,
                               SeedTree *seeds);

}  // namespace ttskit

#endif  // TTSKIT_SCRIPT_GENERATOR_H_
