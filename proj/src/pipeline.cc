// src/pipeline.cc

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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "ttskit/phonemizer.h"
#include "ttskit/text-metrics.h"

namespace ttskit {

namespace fs = std::filesystem;

// ---------------------------------------------------------------- config

void PipelineConfig::Validate() const {
  if (languages.empty()) throw ConfigError("config: no languages");
  if (dataset_size == 0) throw ConfigError("config: dataset_size must be > 0");
  if (min_words == 0 || max_words < min_words) {
    throw ConfigError("config: bad word-count bounds");
  }
  if (temperature <= 0) throw ConfigError("config: temperature must be > 0");
  if (top_p <= 0 || top_p > 1) throw ConfigError("config: top_p in (0, 1]");
  if (entities_per_script > 3) {
    throw ConfigError("config: entities_per_script in [0, 3]");
  }
  if (keyphrases_per_script == 0 && mode == PipelineMode::kOurs) {
    throw ConfigError("config: keyphrases_per_script must be > 0");
  }
  if (jobs < 1) throw ConfigError("config: jobs must be >= 1");
}

std::vector<std::string> PipelineConfig::EffectiveDomains() const {
  return domains.empty() ? Lexicons::Default().domains_default : domains;
}

std::vector<SentenceType> PipelineConfig::EffectiveSentenceTypes() const {
  return sentence_types.empty() ? AllSentenceTypes() : sentence_types;
}

nlohmann::json PipelineConfig::ToJson() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["languages"] = nlohmann::json::array();
  for (Locale l : languages) j["languages"].push_back(LocaleCode(l));
  j["domains"] = EffectiveDomains();
  j["sentence_types"] = nlohmann::json::array();
  for (SentenceType t : EffectiveSentenceTypes()) {
    j["sentence_types"].push_back(SentenceTypeName(t));
  }
  j["entities_per_script"] = entities_per_script;
  j["keyphrases_per_script"] = keyphrases_per_script;
  j["dataset_size"] = dataset_size;
  j["min_words"] = min_words;
  j["max_words"] = max_words;
  j["temperature"] = temperature;
  j["top_p"] = top_p;
  j["mode"] = mode == PipelineMode::kOurs ? "ours" : "baseline";
  j["use_mock"] = use_mock;
  j["strict_keyphrases"] = strict_keyphrases;
  j["retry_budget"] = retry_budget;
  j["keyphrase_pool_min"] = keyphrase_pool_min;
  j["voice"] = voice;
  return j;
}

PipelineConfig PipelineConfig::FromJson(const nlohmann::json &j) {
  PipelineConfig c;
  c.seed = j.at("seed").get<uint64_t>();
  c.languages.clear();
  for (const auto &l : j.at("languages")) {
    c.languages.push_back(ParseLocale(l.get<std::string>()));
  }
  c.domains = j.at("domains").get<std::vector<std::string>>();
  c.sentence_types.clear();
  for (const auto &t : j.at("sentence_types")) {
    c.sentence_types.push_back(ParseSentenceType(t.get<std::string>()));
  }
  c.entities_per_script = j.at("entities_per_script").get<size_t>();
  c.keyphrases_per_script = j.at("keyphrases_per_script").get<size_t>();
  c.dataset_size = j.at("dataset_size").get<size_t>();
  c.min_words = j.at("min_words").get<size_t>();
  c.max_words = j.at("max_words").get<size_t>();
  c.temperature = j.at("temperature").get<double>();
  c.top_p = j.at("top_p").get<double>();
  c.mode = j.at("mode").get<std::string>() == "baseline"
               ? PipelineMode::kBaseline
               : PipelineMode::kOurs;
  c.use_mock = j.at("use_mock").get<bool>();
  c.strict_keyphrases = j.at("strict_keyphrases").get<bool>();
  c.retry_budget = j.at("retry_budget").get<int>();
  c.keyphrase_pool_min = j.at("keyphrase_pool_min").get<size_t>();
  c.voice = j.at("voice").get<std::string>();
  return c;
}

// --------------------------------------------------------------- records

nlohmann::json RecordToJson(const ScriptRecord &record) {
  nlohmann::json j;
  j["id"] = record.id;
  j["domain"] = record.domain;
  j["subdomain"] = record.subdomain;
  j["language"] = LocaleCode(record.language);
  j["sentence_type"] = SentenceTypeName(record.sentence_type);
  j["keyphrases"] = record.keyphrases;
  j["entities"] = nlohmann::json::array();
  for (const auto &e : record.entities) {
    j["entities"].push_back({{"class", SemioticClassName(e.cls)},
                             {"surface", e.surface},
                             {"normalized", e.normalized}});
  }
  j["script"] = record.script;
  j["normalized_script"] = record.normalized_script;
  j["audio_path"] = record.audio_path;
  j["seed"] = record.seed;
  return j;
}

ScriptRecord RecordFromJson(const nlohmann::json &j, bool strict) {
  static const std::vector<std::string> kFields = {
      "id",        "domain",     "subdomain",        "language",
      "sentence_type", "keyphrases", "entities",     "script",
      "normalized_script", "audio_path", "seed"};
  for (const auto &f : kFields) {
    if (!j.contains(f)) {
      throw ParseError("record missing field: " + f);
    }
  }
  if (strict) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (std::find(kFields.begin(), kFields.end(), it.key()) ==
          kFields.end()) {
        throw ParseError("record has unknown field: " + it.key());
      }
    }
  }
  ScriptRecord r;
  r.id = j.at("id").get<std::string>();
  r.domain = j.at("domain").get<std::string>();
  r.subdomain = j.at("subdomain").get<std::string>();
  r.language = ParseLocale(j.at("language").get<std::string>());
  r.sentence_type = ParseSentenceType(j.at("sentence_type").get<std::string>());
  r.keyphrases = j.at("keyphrases").get<std::vector<std::string>>();
  for (const auto &e : j.at("entities")) {
    EntitySample s;
    s.cls = ParseSemioticClass(e.at("class").get<std::string>());
    s.locale = r.language;
    s.surface = e.at("surface").get<std::string>();
    s.normalized = e.at("normalized").get<std::string>();
    r.entities.push_back(std::move(s));
  }
  r.script = j.at("script").get<std::string>();
  r.normalized_script = j.at("normalized_script").get<std::string>();
  r.audio_path = j.at("audio_path").get<std::string>();
  r.seed = j.at("seed").get<uint64_t>();
  return r;
}

// -------------------------------------------------------------- manifest

Manifest Manifest::Load(const std::string &dir) {
  std::string path = dir + "/manifest.json";
  if (!fs::exists(path)) throw IoError("manifest not found: " + path);
  nlohmann::json j = nlohmann::json::parse(ReadFile(path));
  Manifest m;
  m.config = PipelineConfig::FromJson(j.at("config"));
  for (const auto &rec : j.at("records")) {
    m.records.push_back(RecordFromJson(rec));
  }
  if (j.contains("snr_db")) {
    for (auto it = j["snr_db"].begin(); it != j["snr_db"].end(); ++it) {
      m.snr_db[it.key()] = it.value().get<double>();
    }
  }
  if (j.contains("errors")) {
    m.errors = j["errors"].get<std::vector<std::string>>();
  }
  return m;
}

void Manifest::Save(const std::string &dir) const {
  nlohmann::json j;
  j["config"] = config.ToJson();
  j["primary_seed"] = config.seed;
  j["corpus"] = "corpus.jsonl";
  j["records"] = nlohmann::json::array();
  std::string jsonl;
  for (const auto &rec : records) {
    nlohmann::json rj = RecordToJson(rec);
    jsonl += rj.dump() + "\n";
    j["records"].push_back(std::move(rj));
  }
  j["snr_db"] = nlohmann::json::object();
  for (const auto &[id, snr] : snr_db) j["snr_db"][id] = snr;
  j["errors"] = errors;
  WriteFile(dir + "/manifest.json", j.dump(2) + "\n");
  WriteFile(dir + "/corpus.jsonl", jsonl);
}

// -------------------------------------------------------------- generate

namespace {

struct Cell {
  Locale language;
  std::string domain;
  SentenceType type;
};

// Language varies fastest, then domain, then sentence type, so even small
// corpora cover every language and domain early in the round-robin.
std::vector<Cell> BuildCells(const PipelineConfig &config) {
  std::vector<Cell> cells;
  for (SentenceType type : config.EffectiveSentenceTypes()) {
    for (const auto &domain : config.EffectiveDomains()) {
      for (Locale lang : config.languages) {
        cells.push_back({lang, domain, type});
      }
    }
  }
  return cells;
}

std::vector<std::string> ReadLines(const std::string &path) {
  std::vector<std::string> lines;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (!Trim(line).empty()) lines.push_back(line);
  }
  return lines;
}

// Seed-index namespace for the keyphrase phase, far above any record index.
constexpr uint64_t kKeyphraseSeedBase = 1ULL << 62;

}  // namespace

Manifest RunGenerate(const PipelineConfig &config, const std::string &out_dir,
                     LlmClient *llm) {
  config.Validate();
  fs::create_directories(out_dir);

  const std::string config_path = out_dir + "/config.json";
  const std::string corpus_path = out_dir + "/corpus.jsonl";
  nlohmann::json snapshot = config.ToJson();

  size_t resume_from = 0;
  std::vector<std::string> lines(config.dataset_size);
  if (fs::exists(config_path)) {
    nlohmann::json old = nlohmann::json::parse(ReadFile(config_path));
    if (old != snapshot) {
      throw ConfigError(out_dir +
                        " holds a different run configuration; use a fresh "
                        "directory or matching settings");
    }
    if (fs::exists(corpus_path)) {
      auto existing = ReadLines(corpus_path);
      resume_from = std::min(existing.size(), config.dataset_size);
      for (size_t i = 0; i < resume_from; ++i) lines[i] = existing[i];
    }
  } else {
    WriteFile(config_path, snapshot.dump(2) + "\n");
  }

  std::unique_ptr<LlmClient> owned;
  if (!llm) {
    if (config.use_mock) {
      owned = std::make_unique<MockLlm>();
    } else {
      HttpLlmClient::Options opts = HttpLlmClient::Options::FromEnv();
      if (!config.llm_endpoint.empty()) opts.endpoint = config.llm_endpoint;
      if (opts.endpoint.empty()) {
        throw ConfigError(
            "no LLM endpoint configured (set TTSKIT_LLM_URL or pass --mock)");
      }
      owned = std::make_unique<HttpLlmClient>(std::move(opts));
    }
    llm = owned.get();
  }

  SeedTree main_tree(config.seed);
  EntitySampler sampler;
  std::vector<Cell> cells = BuildCells(config);

  // Keyphrase pool, replenished per (domain, language) before generation.
  KeyphraseStore store;
  if (config.mode == PipelineMode::kOurs) {
    const std::string snapshot_path = out_dir + "/keyphrases.tsv";
    if (!config.keyphrase_store_path.empty() &&
        fs::exists(config.keyphrase_store_path)) {
      store = KeyphraseStore::Load(config.keyphrase_store_path);
    } else if (fs::exists(snapshot_path)) {
      store = KeyphraseStore::Load(snapshot_path);
    }
    size_t need =
        std::max(config.keyphrases_per_script, config.keyphrase_pool_min);
    uint64_t cell_index = 0;
    for (Locale lang : config.languages) {
      for (const auto &domain : config.EffectiveDomains()) {
        SeedTree kp_tree = main_tree.Subtree(kKeyphraseSeedBase + cell_index++);
        ReplenishKeyphrases(&store, llm, domain, lang, need, &kp_tree, 64,
                            config.temperature, config.top_p);
      }
    }
    store.Save(snapshot_path);
  }

  ScriptGenOptions gen_options;
  gen_options.min_words = config.min_words;
  gen_options.max_words = config.max_words;
  gen_options.retry_budget = config.retry_budget;
  gen_options.strict_keyphrases = config.strict_keyphrases;
  gen_options.temperature = config.temperature;
  gen_options.top_p = config.top_p;

  std::mutex io_mutex;
  std::vector<std::string> reject_log;
  std::ofstream corpus_out(corpus_path,
                           resume_from ? std::ios::app : std::ios::trunc);
  size_t next_to_flush = resume_from;
  std::vector<bool> done(config.dataset_size, false);
  std::exception_ptr first_error;

  auto make_record = [&](size_t index) {
    const Cell &cell = cells[index % cells.size()];
    SeedTree record_tree(main_tree.SeedAt(index));

    ScriptRequest req;
    req.id = RecordId(index);
    req.domain = cell.domain;
    req.language = cell.language;
    req.type = cell.type;
    req.mode = config.mode;
    if (config.mode == PipelineMode::kOurs) {
      auto phrases = store.Sample(cell.domain, cell.language,
                                  config.keyphrases_per_script, &record_tree);
      for (auto &p : phrases) req.keyphrases.push_back(p.phrase);
      if (!phrases.empty()) req.subdomain = phrases[0].subdomain;
      // The phrase template takes no numbers or dates, hence no entities.
      if (cell.type != SentenceType::kPhrase) {
        for (size_t e = 0; e < config.entities_per_script; ++e) {
          // Surfaces must be distinct or the exactly-once substitution
          // check could never pass; colliding draws redraw.
          for (int attempt = 0; attempt < 8; ++attempt) {
            Rng class_rng(record_tree.Next());
            SemioticClass cls =
                AllSemioticClasses()[class_rng.Below(kNumSemioticClasses)];
            EntitySample sample =
                sampler.Sample(cls, cell.language, record_tree.Next());
            bool duplicate = false;
            for (const auto &prev : req.entities) {
              duplicate |= prev.surface.find(sample.surface) !=
                               std::string::npos ||
                           sample.surface.find(prev.surface) !=
                               std::string::npos;
            }
            if (!duplicate) {
              req.entities.push_back(std::move(sample));
              break;
            }
          }
        }
      }
    }

    ScriptGenResult result = GenerateScript(llm, req, gen_options,
                                            &record_tree);
    std::string line = RecordToJson(result.record).dump();

    std::lock_guard<std::mutex> lock(io_mutex);
    for (auto &r : result.rejects) reject_log.push_back(std::move(r));
    for (auto &w : result.warnings) {
      reject_log.push_back("warning: " + std::move(w));
    }
    lines[index] = std::move(line);
    done[index] = true;
    while (next_to_flush < config.dataset_size && done[next_to_flush]) {
      corpus_out << lines[next_to_flush] << "\n";
      corpus_out.flush();
      ++next_to_flush;
    }
  };

  size_t jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (size_t i = resume_from; i < config.dataset_size; ++i) {
      make_record(i);
    }
  } else {
    std::vector<std::thread> workers;
    for (size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (size_t i = resume_from + w; i < config.dataset_size; i += jobs) {
          try {
            make_record(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(io_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto &t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  corpus_out.close();

  std::string rejects_text;
  for (const auto &r : reject_log) rejects_text += r + "\n";
  if (resume_from == 0 || !rejects_text.empty()) {
    std::ofstream rejects(out_dir + "/rejects.log",
                          resume_from ? std::ios::app : std::ios::trunc);
    rejects << rejects_text;
  }

  Manifest manifest;
  manifest.config = config;
  for (size_t i = 0; i < config.dataset_size; ++i) {
    manifest.records.push_back(
        RecordFromJson(nlohmann::json::parse(lines[i])));
  }
  manifest.Save(out_dir);
  return manifest;
}

// ------------------------------------------------------------ synthesize

Manifest RunSynthesize(const std::string &dir, const PipelineConfig &overrides,
                       TtsClient *tts, ToneConverterClient *tone) {
  Manifest manifest = Manifest::Load(dir);
  bool mock = overrides.use_mock || manifest.config.use_mock;
  std::string voice =
      overrides.voice.empty() ? manifest.config.voice : overrides.voice;

  std::unique_ptr<TtsClient> owned_tts;
  std::unique_ptr<ToneConverterClient> owned_tone;
  MockTts mock_tts;
  AudioBuffer reference;
  if (!tts) {
    if (mock) {
      owned_tts = std::make_unique<MockTts>();
    } else {
      std::string endpoint = !overrides.tts_endpoint.empty()
                                 ? overrides.tts_endpoint
                                 : manifest.config.tts_endpoint;
      if (endpoint.empty()) {
        throw ConfigError("no TTS endpoint configured and --mock not set");
      }
      owned_tts = std::make_unique<HttpTtsClient>(
          HttpTtsClient::Options{endpoint, 120});
    }
    tts = owned_tts.get();
  }
  if (!tone) {
    std::string endpoint = !overrides.tone_endpoint.empty()
                               ? overrides.tone_endpoint
                               : manifest.config.tone_endpoint;
    if (!mock && !endpoint.empty()) {
      owned_tone = std::make_unique<HttpToneConverter>(
          HttpToneConverter::Options{endpoint, 120});
    } else {
      owned_tone = std::make_unique<MockToneConverter>();
    }
    tone = owned_tone.get();
  }
  std::string ref_path = !overrides.reference_audio.empty()
                             ? overrides.reference_audio
                             : manifest.config.reference_audio;
  if (!ref_path.empty()) {
    reference = ReadWav(ref_path);
  } else {
    reference = mock_tts.ReferenceVoice(voice);
  }

  for (auto &record : manifest.records) {
    std::string wav_name = record.id + ".wav";
    std::string wav_path = dir + "/" + wav_name;
    if (!record.audio_path.empty() && fs::exists(dir + "/" + record.audio_path)) {
      continue;  // idempotent re-run
    }
    try {
      AudioBuffer audio = SynthesizeStandardized(
          tts, tone, record.normalized_script, record.language, reference);
      WriteWav(wav_path, audio);
      record.audio_path = wav_name;
      manifest.snr_db[record.id] = EstimateSnrDb(audio);
    } catch (const Error &e) {
      manifest.errors.push_back(record.id + ": " + e.what());
    }
  }
  manifest.Save(dir);
  return manifest;
}

// -------------------------------------------------------------- evaluate

namespace {

nlohmann::json EvaluateLanguageSection(
    const std::vector<const ScriptRecord *> &records, Locale lang,
    const Manifest &manifest, const std::string &dir,
    const EvaluateOptions &options, const Phonemizer &phonemizer) {
  nlohmann::json section;

  std::vector<const ScriptRecord *> kept;
  for (const auto *r : records) {
    size_t words = CountWords(r->script);
    if (words >= manifest.config.min_words &&
        words <= manifest.config.max_words) {
      kept.push_back(r);
    }
  }
  section["records"] = kept.size();
  section["excluded_by_length"] = records.size() - kept.size();
  if (kept.empty()) throw Error("evaluate: corpus is empty after filtering");

  // Lexical diversity over the pooled corpus.
  std::vector<std::string> tokens;
  std::vector<std::string> texts;
  for (const auto *r : kept) {
    auto t = Tokenize(r->script);
    tokens.insert(tokens.end(), t.begin(), t.end());
    texts.push_back(r->script);
  }
  section["ttr"] = Ttr(tokens);
  section["mattr"] = Mattr(tokens, options.mattr_window);

  // Diphone coverage and the coverage-vs-size curve over nested prefixes.
  std::vector<size_t> breakpoints;
  size_t steps = static_cast<size_t>(std::max(1, options.curve_steps));
  for (size_t s = 1; s <= steps; ++s) {
    size_t target = std::max<size_t>(1, kept.size() * s / steps);
    if (breakpoints.empty() || breakpoints.back() != target) {
      breakpoints.push_back(target);
    }
  }
  std::set<std::pair<Phoneme, Phoneme>> diphones;
  nlohmann::json curve = nlohmann::json::array();
  size_t bp = 0;
  for (size_t i = 0; i < kept.size(); ++i) {
    auto more = DiphoneSet({kept[i]->script}, lang, phonemizer);
    diphones.insert(more.begin(), more.end());
    while (bp < breakpoints.size() && breakpoints[bp] == i + 1) {
      curve.push_back({i + 1, diphones.size()});
      ++bp;
    }
  }
  section["diphone_coverage"] = diphones.size();
  section["diphone_curve"] = curve;

  // Pairwise similarity with the deterministic embedding stand-in.
  HashEmbedding embedder;
  std::vector<LabeledText> labeled;
  for (const auto *r : kept) {
    labeled.push_back(
        {r->domain + "/" + SentenceTypeName(r->sentence_type), r->script});
  }
  try {
    SimilarityReport sim = GroupedSimilarity(labeled, &embedder);
    section["similarity"] = {{"grouped_mean", sim.grouped_mean},
                             {"grouped_max", sim.grouped_max},
                             {"ungrouped_mean", sim.ungrouped_mean},
                             {"groups", sim.groups.size()},
                             {"excluded_groups", sim.excluded_groups.size()}};
  } catch (const Error &) {
    section["similarity"] = nullptr;  // too few records to compare
  }

  // Audio metrics for records with synthesized audio.
  nlohmann::json audio;
  size_t with_audio = 0;
  double snr_sum = 0.0;
  size_t snr_count = 0;
  std::vector<double> wers;
  std::map<std::string, std::string> transcripts;
  for (const auto *r : kept) {
    if (!r->audio_path.empty()) transcripts[r->id] = r->normalized_script;
  }
  std::unique_ptr<AsrClient> asr;
  if (!options.asr_endpoint.empty()) {
    asr = std::make_unique<HttpAsrClient>(
        HttpAsrClient::Options{options.asr_endpoint, 120});
  } else if (options.use_mock) {
    asr = std::make_unique<MockAsr>(transcripts);
  }
  for (const auto *r : kept) {
    if (r->audio_path.empty()) continue;
    ++with_audio;
    auto it = manifest.snr_db.find(r->id);
    if (it != manifest.snr_db.end()) {
      snr_sum += it->second;
      ++snr_count;
    }
    if (asr) {
      AudioBuffer buffer;
      if (!options.asr_endpoint.empty()) {
        buffer = ReadWav(dir + "/" + r->audio_path);
      }
      std::string hyp = asr->Transcribe(r->id, buffer);
      wers.push_back(WerPercent(SplitWhitespace(r->normalized_script),
                                SplitWhitespace(hyp)));
    }
  }
  audio["records_with_audio"] = with_audio;
  audio["mean_snr_db"] =
      snr_count ? nlohmann::json(snr_sum / snr_count) : nlohmann::json();
  if (!wers.empty()) {
    double sum = 0;
    for (double w : wers) sum += w;
    audio["wer_percent"] = sum / wers.size();
  } else {
    audio["wer_percent"] = nullptr;
  }
  // MOS comes only from an external scorer's output file.
  if (!options.mos_file.empty()) {
    nlohmann::json mos = nlohmann::json::parse(ReadFile(options.mos_file));
    double sum = 0;
    size_t count = 0;
    for (const auto *r : kept) {
      if (mos.contains(r->id)) {
        sum += mos[r->id].get<double>();
        ++count;
      }
    }
    audio["mos"] = count ? nlohmann::json(sum / count) : nlohmann::json();
  } else {
    audio["mos"] = nullptr;
  }
  section["audio"] = audio;

  // Normalization accuracy against a supplied ground truth.
  if (!options.ground_truth_file.empty()) {
    std::map<std::string, std::string> truth;
    for (const auto &line : ReadLines(options.ground_truth_file)) {
      auto cols = Split(line, '\t');
      if (cols.size() != 2) {
        throw ParseError("ground truth needs id<TAB>text lines");
      }
      truth[cols[0]] = cols[1];
    }
    std::vector<std::string> predictions, expected;
    std::vector<std::string> ids;
    for (const auto *r : kept) {
      auto it = truth.find(r->id);
      if (it == truth.end()) continue;
      predictions.push_back(r->normalized_script);
      expected.push_back(it->second);
      ids.push_back(r->id);
    }
    if (!predictions.empty()) {
      NormAccuracyOptions n;
      n.ignore_commas = options.ignore_commas;
      NormAccuracyReport rep = NormalizationAccuracy(predictions, expected, n);
      nlohmann::json mismatched = nlohmann::json::array();
      for (size_t idx : rep.mismatch_indices) mismatched.push_back(ids[idx]);
      section["normalization_accuracy"] = {{"accuracy", rep.accuracy},
                                           {"scored", rep.total},
                                           {"mismatches", mismatched}};
    } else {
      section["normalization_accuracy"] = nullptr;
    }
  } else {
    section["normalization_accuracy"] = nullptr;
  }
  return section;
}

}  // namespace

nlohmann::json RunEvaluate(const std::vector<std::string> &manifest_dirs,
                           const EvaluateOptions &options) {
  if (manifest_dirs.empty()) throw ConfigError("evaluate: no manifests");
  Phonemizer phonemizer;
  nlohmann::json report;
  report["datasets"] = nlohmann::json::array();
  for (const auto &dir : manifest_dirs) {
    Manifest manifest = Manifest::Load(dir);
    if (manifest.records.empty()) {
      throw Error("evaluate: empty corpus in " + dir);
    }
    if (options.strict_schema) {
      for (const auto &line : ReadLines(dir + "/corpus.jsonl")) {
        RecordFromJson(nlohmann::json::parse(line), /*strict=*/true);
      }
    }
    nlohmann::json entry;
    entry["name"] = fs::path(dir).filename().string();
    entry["dir"] = dir;
    entry["mode"] = manifest.config.mode == PipelineMode::kOurs ? "ours"
                                                                : "baseline";
    entry["languages"] = nlohmann::json::object();
    for (Locale lang : manifest.config.languages) {
      std::vector<const ScriptRecord *> records;
      for (const auto &r : manifest.records) {
        if (r.language == lang) records.push_back(&r);
      }
      if (records.empty()) continue;
      entry["languages"][LocaleCode(lang)] = EvaluateLanguageSection(
          records, lang, manifest, dir, options, phonemizer);
    }
    report["datasets"].push_back(std::move(entry));
  }
  return report;
}

namespace {

std::string FormatCell(const nlohmann::json &value, const char *fmt) {
  if (value.is_null()) return "-";
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, value.get<double>());
  return buf;
}

}  // namespace

std::string RenderReportTable(const nlohmann::json &report) {
  struct Row {
    const char *label;
    std::function<nlohmann::json(const nlohmann::json &)> get;
    const char *fmt;
  };
  auto sim = [](const nlohmann::json &s, const char *key) -> nlohmann::json {
    return s["similarity"].is_null() ? nlohmann::json() : s["similarity"][key];
  };
  std::vector<Row> rows = {
      {"Records", [](const nlohmann::json &s) { return s["records"]; },
       "%.0f"},
      {"TTR", [](const nlohmann::json &s) { return s["ttr"]; }, "%.3f"},
      {"MATTR", [](const nlohmann::json &s) { return s["mattr"]; }, "%.3f"},
      {"Diphone Coverage",
       [](const nlohmann::json &s) { return s["diphone_coverage"]; }, "%.0f"},
      {"Mean Sim (Grouped)",
       [&](const nlohmann::json &s) { return sim(s, "grouped_mean"); },
       "%.3f"},
      {"Max Sim (Grouped)",
       [&](const nlohmann::json &s) { return sim(s, "grouped_max"); }, "%.3f"},
      {"Mean Sim (Ungrouped)",
       [&](const nlohmann::json &s) { return sim(s, "ungrouped_mean"); },
       "%.3f"},
      {"Mean SNR (dB)",
       [](const nlohmann::json &s) { return s["audio"]["mean_snr_db"]; },
       "%.2f"},
      {"WER (%)",
       [](const nlohmann::json &s) { return s["audio"]["wer_percent"]; },
       "%.2f"},
      {"MOS", [](const nlohmann::json &s) { return s["audio"]["mos"]; },
       "%.2f"},
      {"Norm. Accuracy",
       [](const nlohmann::json &s) {
         return s["normalization_accuracy"].is_null()
                    ? nlohmann::json()
                    : s["normalization_accuracy"]["accuracy"];
       },
       "%.3f"},
  };

  std::vector<std::pair<std::string, const nlohmann::json *>> columns;
  for (const auto &dataset : report["datasets"]) {
    for (auto it = dataset["languages"].begin();
         it != dataset["languages"].end(); ++it) {
      columns.emplace_back(
          dataset["mode"].get<std::string>() + "/" + it.key(), &it.value());
    }
  }

  std::ostringstream out;
  const int label_width = 22, col_width = 16;
  out << std::string(label_width, ' ');
  for (const auto &[name, section] : columns) {
    out << std::string(col_width > static_cast<int>(name.size())
                           ? col_width - name.size()
                           : 1,
                       ' ')
        << name;
  }
  out << "\n";
  for (const auto &row : rows) {
    std::string label(row.label);
    out << label << std::string(label_width - label.size(), ' ');
    for (const auto &[name, section] : columns) {
      std::string cell = FormatCell(row.get(*section), row.fmt);
      out << std::string(col_width > static_cast<int>(cell.size())
                             ? col_width - cell.size()
                             : 1,
                         ' ')
          << cell;
    }
    out << "\n";
  }

  // Coverage growth with dataset size, one block per column.
  out << "\nDiphone coverage by dataset size:\n";
  for (const auto &[name, section] : columns) {
    out << "  " << name << ":";
    for (const auto &point : (*section)["diphone_curve"]) {
      out << " " << point[0].get<size_t>() << ">"
          << point[1].get<size_t>();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ttskit
