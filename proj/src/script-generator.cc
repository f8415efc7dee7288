// src/script-generator.cc

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

#include <algorithm>

#include "ttskit/post-normalize.h"

namespace ttskit {

namespace {

const PostNormConfig &PostNormFor(Locale loc) {
  static const PostNormConfig *en =
      new PostNormConfig(PostNormConfig::ForLocale(Locale::kEnglish));
  static const PostNormConfig *es =
      new PostNormConfig(PostNormConfig::ForLocale(Locale::kSpanish));
  return loc == Locale::kEnglish ? *en : *es;
}

size_t CountOccurrences(std::string_view text, std::string_view needle) {
  if (needle.empty()) return 0;
  size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string_view::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

std::string SentenceTypeName(SentenceType type) {
  switch (type) {
    case SentenceType::kStatement: return "statement";
    case SentenceType::kExclamation: return "exclamation";
    case SentenceType::kQuestion: return "question";
    case SentenceType::kPhrase: return "phrase";
    case SentenceType::kUtterance: return "utterance";
  }
  return "unknown";
}

SentenceType ParseSentenceType(std::string_view name) {
  std::string n = ToLowerAscii(name);
  for (SentenceType t : AllSentenceTypes()) {
    if (SentenceTypeName(t) == n) return t;
  }
  throw ConfigError("unknown sentence type: " + std::string(name));
}

const std::vector<SentenceType> &AllSentenceTypes() {
  static const auto *all = new std::vector<SentenceType>{
      SentenceType::kStatement, SentenceType::kExclamation,
      SentenceType::kQuestion, SentenceType::kPhrase,
      SentenceType::kUtterance};
  return *all;
}

std::string BuildPrompt(SentenceType type, PipelineMode mode,
                        std::string_view domain, Locale language,
                        const std::vector<std::string> &keyphrases,
                        const std::vector<EntitySample> &entities) {
  const std::string lang = LocaleName(language);
  const std::string dom(domain);

  if (mode == PipelineMode::kBaseline) {
    if (!keyphrases.empty() || !entities.empty()) {
      throw Error("baseline prompts take no keyphrases or entities");
    }
    const std::string no_translate =
        " I am well aware of " + lang + " language, so do not translate it.";
    switch (type) {
      case SentenceType::kStatement:
        return "Construct one sentence in " + lang + " language in " + dom +
               " domain." + no_translate;
      case SentenceType::kExclamation:
        return "Construct one sentence in " + lang + " language in " + dom +
               " domain. The generated sentence should be exclamatory and "
               "have a surprising tone." +
               no_translate;
      case SentenceType::kQuestion:
        return "Construct one sentence in " + lang + " language in " + dom +
               " domain. The generated sentence should be a question." +
               no_translate;
      case SentenceType::kPhrase:
        return "Construct a short phrase in " + lang + " language in " + dom +
               " domain. The phrase should contain about 5 to 7 words. It "
               "should be strictly a phrase and not a sentence." +
               no_translate;
      case SentenceType::kUtterance:
        return "Construct a short arbitrary conversation between two people "
               "in " +
               lang + " language in " + dom + " domain." + no_translate;
    }
  }

  std::string words = Join(keyphrases, ", ");
  std::vector<std::string> surfaces;
  for (const auto &e : entities) surfaces.push_back(e.surface);
  std::string ents = Join(surfaces, ", ");
  const std::string entity_clause =
      " The following entities should also be present in the text: " + ents +
      ".";

  switch (type) {
    case SentenceType::kStatement:
      return "Construct one sentence in " + lang + " language in " + dom +
             " domain with the following words: " + words + "." +
             (entities.empty() ? "" : entity_clause);
    case SentenceType::kExclamation:
      return "Construct one sentence in " + lang + " language in " + dom +
             " domain with the following words: " + words + "." +
             (entities.empty() ? "" : entity_clause) +
             " The generated sentence should be exclamatory and have a "
             "surprising tone.";
    case SentenceType::kQuestion:
      return "Construct one sentence in " + lang + " language in " + dom +
             " domain with the following words: " + words + "." +
             (entities.empty() ? "" : entity_clause) +
             " The generated sentence should be a question.";
    case SentenceType::kPhrase:
      if (!entities.empty()) {
        throw Error("phrase prompts take no entities (no numbers or dates)");
      }
      return "Construct a short phrase in " + lang + " language in " + dom +
             " domain with the following words: " + words +
             ". The phrase should contain about 5 to 7 words. The phrase "
             "should not have any numbers or dates. It should be strictly a "
             "phrase and not a sentence.";
    case SentenceType::kUtterance:
      return "Construct a short arbitrary conversation between two people "
             "in " +
             lang + " language in " + dom +
             " domain containing the following words: " + words + "." +
             (entities.empty() ? "" : entity_clause);
  }
  throw Error("unknown sentence type");
}

std::string SubstituteNormalized(std::string_view script,
                                 const std::vector<EntitySample> &entities) {
  std::vector<const EntitySample *> order;
  for (const auto &e : entities) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const EntitySample *a, const EntitySample *b) {
                     return a->surface.size() > b->surface.size();
                   });
  std::string out(script);
  for (const EntitySample *e : order) {
    size_t pos = out.find(e->surface);
    if (pos == std::string::npos) {
      throw Error("entity surface not found in script: \"" + e->surface +
                  "\"");
    }
    out.replace(pos, e->surface.size(), e->normalized);
  }
  return out;
}

size_t CountWords(std::string_view text) {
  return SplitWhitespace(text).size();
}

ScriptGenResult GenerateScript(LlmClient *llm, const ScriptRequest &request,
                               const ScriptGenOptions &options,
                               SeedTree *seeds) {
  ScriptGenResult result;
  std::string prompt =
      BuildPrompt(request.type, request.mode, request.domain, request.language,
                  request.keyphrases, request.entities);

  nlohmann::json schema = {
      {"type", "object"},
      {"required", {"text"}},
      {"properties", {{"text", {{"type", "string"}}}}}};

  for (int attempt = 0; attempt <= options.retry_budget; ++attempt) {
    GenerationRequest req;
    req.messages.push_back({"user", prompt});
    req.response_schema = schema;
    req.temperature = options.temperature;
    req.top_p = options.top_p;
    req.seed_hint = seeds->Next();

    GenerationResponse resp = llm->Generate(req);
    std::string script = Trim((*resp.parsed)["text"].get<std::string>());

    size_t words = CountWords(script);
    if (words < options.min_words || words > options.max_words) {
      result.rejects.push_back(request.id + ": length filter (" +
                               std::to_string(words) + " words): " + script);
      continue;
    }

    bool entities_ok = true;
    for (const auto &e : request.entities) {
      size_t n = CountOccurrences(script, e.surface);
      if (n != 1) {
        result.rejects.push_back(request.id + ": entity \"" + e.surface +
                                 "\" appears " + std::to_string(n) +
                                 " times: " + script);
        entities_ok = false;
        break;
      }
    }
    if (!entities_ok) continue;

    std::vector<std::string> missing;
    for (const auto &k : request.keyphrases) {
      if (!ContainsCaseInsensitive(script, k)) missing.push_back(k);
    }
    if (!missing.empty()) {
      if (options.strict_keyphrases) {
        result.rejects.push_back(request.id + ": missing keyphrases (" +
                                 Join(missing, "; ") + "): " + script);
        continue;
      }
      for (const auto &k : missing) {
        result.warnings.push_back(request.id + ": keyphrase not in script: " +
                                  k);
      }
    }

    ScriptRecord rec;
    rec.id = request.id;
    rec.domain = request.domain;
    rec.subdomain = request.subdomain;
    rec.language = request.language;
    rec.sentence_type = request.type;
    rec.keyphrases = request.keyphrases;
    rec.entities = request.entities;
    rec.script = script;
    rec.normalized_script = PostNormalize(
        SubstituteNormalized(script, request.entities),
        PostNormFor(request.language));
    rec.seed = seeds->primary_seed();
    result.record = std::move(rec);
    return result;
  }
  throw Error("script generation for " + request.id + " exhausted " +
              std::to_string(options.retry_budget + 1) + " attempts (" +
              std::to_string(result.rejects.size()) + " rejects)");
}

}  // namespace ttskit
