// tools/ttskit-main.cc

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

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "ttskit/entity-sampler.h"
#include "ttskit/pipeline.h"

namespace {

using namespace ttskit;

std::vector<Locale> ParseLocales(const std::vector<std::string> &codes) {
  std::vector<Locale> out;
  for (const auto &c : codes) out.push_back(ParseLocale(c));
  return out;
}

void AddConfigOptions(CLI::App *cmd, PipelineConfig *config,
                      std::vector<std::string> *languages,
                      std::string *mode) {
  cmd->add_option("--seed", config->seed, "Primary seed")->envname("TTSKIT_SEED");
  cmd->add_option("--language", *languages,
                  "Language code (en, es); repeatable");
  cmd->add_option("--domain", config->domains,
                  "Business domain; repeatable (default: shipped list of 16)");
  cmd->add_option("--size", config->dataset_size, "Number of records");
  cmd->add_option("--mode", *mode, "ours | baseline")
      ->check(CLI::IsMember({"ours", "baseline"}));
  cmd->add_flag("--mock", config->use_mock,
                "Use the offline deterministic model stand-ins");
  cmd->add_option("--entities-per-script", config->entities_per_script,
                  "Entities sampled per script (0-3)");
  cmd->add_option("--keyphrases-per-script", config->keyphrases_per_script,
                  "Keyphrases sampled per script");
  cmd->add_option("--temperature", config->temperature, "Sampling temperature");
  cmd->add_option("--top-p", config->top_p, "Nucleus sampling mass");
  cmd->add_option("--retry-budget", config->retry_budget,
                  "Redraws allowed per record");
  cmd->add_flag("--strict-keyphrases", config->strict_keyphrases,
                "Reject scripts that drop a requested keyphrase");
  cmd->add_option("--jobs", config->jobs, "Parallel record workers");
  cmd->add_option("--llm-endpoint", config->llm_endpoint,
                  "Chat-completions endpoint URL")
      ->envname("TTSKIT_LLM_URL");
  cmd->add_option("--keyphrase-store", config->keyphrase_store_path,
                  "Preload keyphrases from this TSV store");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "Deterministic generator of domain text scripts with spoken-form "
      "normalization, plus speech synthesis orchestration and corpus "
      "quality metrics"};
  app.require_subcommand(1);
  // TOML config with one section per subcommand, e.g. [generate].
  app.set_config("--config", "", "TOML config file")->envname("TTSKIT_CONFIG");

  // ---- keyphrases
  auto *kp = app.add_subcommand(
      "keyphrases", "Fill a keyphrase store through the prompt chain");
  PipelineConfig kp_config;
  std::vector<std::string> kp_languages;
  std::string kp_mode = "ours";
  size_t kp_count = 12;
  std::string kp_store = "keyphrases.tsv";
  AddConfigOptions(kp, &kp_config, &kp_languages, &kp_mode);
  kp->add_option("--count", kp_count, "Phrases per (domain, language) group");
  kp->add_option("--store", kp_store, "Store file to create or extend");

  // ---- generate
  auto *gen = app.add_subcommand(
      "generate", "Generate the text corpus (manifest + JSONL)");
  PipelineConfig gen_config;
  std::vector<std::string> gen_languages;
  std::string gen_mode = "ours";
  std::string gen_out = "out";
  AddConfigOptions(gen, &gen_config, &gen_languages, &gen_mode);
  gen->add_option("--out", gen_out, "Output directory");

  // ---- synthesize
  auto *syn = app.add_subcommand(
      "synthesize", "Synthesize one WAV per record and record SNR");
  std::string syn_dir = "out";
  PipelineConfig syn_overrides;
  syn->add_option("--out", syn_dir, "Run directory holding manifest.json");
  syn->add_flag("--mock", syn_overrides.use_mock,
                "Use the deterministic synthesizer stand-in");
  syn->add_option("--voice", syn_overrides.voice, "Reference voice id");
  syn->add_option("--tts-endpoint", syn_overrides.tts_endpoint,
                  "Live TTS endpoint")
      ->envname("TTSKIT_TTS_URL");
  syn->add_option("--tone-endpoint", syn_overrides.tone_endpoint,
                  "Live tone-conversion endpoint")
      ->envname("TTSKIT_TONE_URL");
  syn->add_option("--reference-audio", syn_overrides.reference_audio,
                  "Reference speaker WAV (live mode)");

  // ---- evaluate
  auto *eval = app.add_subcommand(
      "evaluate", "Compute corpus diversity/quality metrics");
  std::vector<std::string> eval_dirs;
  EvaluateOptions eval_options;
  std::string eval_out = "report";
  bool no_comma_exemption = false;
  eval->add_option("--manifest", eval_dirs, "Run directory; repeatable")
      ->required();
  eval->add_option("--out", eval_out,
                   "Report path prefix (.json and .txt are appended)");
  eval->add_flag("--mock", eval_options.use_mock,
                 "Use offline transcript/embedding stand-ins");
  eval->add_flag("--strict", eval_options.strict_schema,
                 "Reject records with unknown JSONL fields");
  eval->add_option("--asr-endpoint", eval_options.asr_endpoint,
                   "Live ASR endpoint for WER")
      ->envname("TTSKIT_ASR_URL");
  eval->add_option("--mos-file", eval_options.mos_file,
                   "External MOS scores (JSON: record id -> score)");
  eval->add_option("--ground-truth", eval_options.ground_truth_file,
                   "Corrected normalizations (TSV: record id, text)");
  eval->add_flag("--no-comma-exemption", no_comma_exemption,
                 "Penalize comma placement in accuracy scoring");

  // ---- verbalize
  auto *verb = app.add_subcommand(
      "verbalize", "One-shot entity normalization for debugging");
  std::string verb_class, verb_locale = "en", verb_text;
  verb->add_option("--class", verb_class,
                   "Semiotic class (address, phone_number, email, url, date, "
                   "time, percentage, amount, person_with_salutation)")
      ->required();
  verb->add_option("--locale", verb_locale, "en | es");
  verb->add_option("--text", verb_text, "Surface form to verbalize")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*kp) {
      if (!kp_languages.empty()) kp_config.languages = ParseLocales(kp_languages);
      kp_config.Validate();
      std::unique_ptr<LlmClient> llm;
      if (kp_config.use_mock) {
        llm = std::make_unique<MockLlm>();
      } else {
        HttpLlmClient::Options opts = HttpLlmClient::Options::FromEnv();
        if (!kp_config.llm_endpoint.empty()) {
          opts.endpoint = kp_config.llm_endpoint;
        }
        if (opts.endpoint.empty()) {
          throw ConfigError("no LLM endpoint configured; set TTSKIT_LLM_URL "
                            "or pass --mock");
        }
        llm = std::make_unique<HttpLlmClient>(std::move(opts));
      }
      KeyphraseStore store;
      if (std::filesystem::exists(kp_store)) {
        store = KeyphraseStore::Load(kp_store);
      }
      SeedTree tree(kp_config.seed);
      uint64_t cell = 0;
      for (Locale lang : kp_config.languages) {
        for (const auto &domain : kp_config.EffectiveDomains()) {
          SeedTree sub = tree.Subtree((1ULL << 62) + cell++);
          ReplenishKeyphrases(&store, llm.get(), domain, lang, kp_count, &sub,
                              64, kp_config.temperature, kp_config.top_p);
        }
      }
      store.Save(kp_store);
      std::cout << "stored " << store.TotalCount() << " keyphrases in "
                << kp_store << "\n";
    } else if (*gen) {
      if (!gen_languages.empty()) {
        gen_config.languages = ParseLocales(gen_languages);
      }
      gen_config.mode = gen_mode == "baseline" ? PipelineMode::kBaseline
                                               : PipelineMode::kOurs;
      Manifest manifest = RunGenerate(gen_config, gen_out);
      std::cout << "wrote " << manifest.records.size() << " records to "
                << gen_out << "/corpus.jsonl\n";
    } else if (*syn) {
      Manifest manifest = RunSynthesize(syn_dir, syn_overrides);
      size_t with_audio = 0;
      for (const auto &r : manifest.records) {
        if (!r.audio_path.empty()) ++with_audio;
      }
      std::cout << "synthesized audio for " << with_audio << "/"
                << manifest.records.size() << " records in " << syn_dir
                << "\n";
      for (const auto &e : manifest.errors) {
        std::cerr << "error: " << e << "\n";
      }
    } else if (*eval) {
      eval_options.ignore_commas = !no_comma_exemption;
      nlohmann::json report = RunEvaluate(eval_dirs, eval_options);
      WriteFile(eval_out + ".json", report.dump(2) + "\n");
      std::string table = RenderReportTable(report);
      WriteFile(eval_out + ".txt", table);
      std::cout << table;
      std::cout << "report written to " << eval_out << ".json\n";
    } else if (*verb) {
      EntitySampler sampler;
      std::cout << sampler.Verbalize(ParseSemioticClass(verb_class),
                                     ParseLocale(verb_locale), verb_text)
                << "\n";
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
