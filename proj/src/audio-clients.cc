// src/audio-clients.cc

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

#include "ttskit/audio-clients.h"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "httplib.h"
#include "json.hpp"
#include "ttskit/seed-tree.h"
#include "ttskit/util.h"

namespace ttskit {

namespace {

uint64_t HashText(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

void SplitEndpoint(const std::string &url, const char *fallback_path,
                   std::string *host, std::string *path) {
  size_t scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw ConfigError("endpoint must be an http(s) URL: " + url);
  }
  size_t p = url.find('/', scheme + 3);
  *host = p == std::string::npos ? url : url.substr(0, p);
  *path = p == std::string::npos ? fallback_path : url.substr(p);
}

}  // namespace

AudioBuffer SynthesizeStandardized(TtsClient *tts, ToneConverterClient *tone,
                                   const std::string &normalized_text,
                                   Locale locale,
                                   const AudioBuffer &reference_voice) {
  if (Trim(normalized_text).empty()) {
    throw Error("synthesize: empty normalized text");
  }
  AudioBuffer base = tts->Synthesize(normalized_text, locale, "default");
  AudioBuffer converted = tone->Convert(base, reference_voice);
  if (converted.sample_rate != base.sample_rate) {
    throw Error("tone converter changed the sample rate");
  }
  double base_dur = base.duration_sec();
  if (base_dur > 0) {
    double drift =
        std::abs(converted.duration_sec() - base_dur) / base_dur;
    if (drift > 0.10) {
      throw Error("tone converter shifted duration by " +
                  std::to_string(drift * 100) + "%");
    }
  }
  return converted;
}

AudioBuffer MockTts::Synthesize(const std::string &normalized_text,
                                Locale locale, const std::string &voice_id) {
  (void)locale;
  AudioBuffer out;
  out.sample_rate = sample_rate_;
  Rng noise(HashText(normalized_text) ^ HashText(voice_id));

  auto push_noise = [&](double seconds) {
    size_t n = static_cast<size_t>(seconds * sample_rate_);
    for (size_t i = 0; i < n; ++i) {
      out.samples.push_back(
          noise_floor_ * (2.0f * static_cast<float>(noise.Unit()) - 1.0f));
    }
  };

  push_noise(0.06);
  for (const auto &word : SplitWhitespace(normalized_text)) {
    double freq =
        180.0 + static_cast<double>((HashText(word) ^ HashText(voice_id)) %
                                    500);
    size_t n = static_cast<size_t>(0.12 * sample_rate_);
    for (size_t i = 0; i < n; ++i) {
      double t = static_cast<double>(i) / sample_rate_;
      float tone_sample =
          0.35f * static_cast<float>(std::sin(2.0 * M_PI * freq * t));
      float noise_sample =
          noise_floor_ * (2.0f * static_cast<float>(noise.Unit()) - 1.0f);
      out.samples.push_back(tone_sample + noise_sample);
    }
    push_noise(0.04);
  }
  push_noise(0.02);
  return out;
}

AudioBuffer MockTts::ReferenceVoice(const std::string &voice_id) {
  return Synthesize("reference voice sample for cloning", Locale::kEnglish,
                    voice_id);
}

AudioBuffer MockToneConverter::Convert(const AudioBuffer &source,
                                       const AudioBuffer &reference) {
  // Color the source with a gain derived from the reference content; rate
  // and length are untouched.
  uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < reference.samples.size() && i < 256; ++i) {
    h ^= static_cast<uint32_t>(reference.samples[i] * 32768.0f) & 0xffu;
    h *= 0x100000001B3ULL;
  }
  float gain = 0.85f + 0.1f * static_cast<float>(h % 100) / 100.0f;
  AudioBuffer out;
  out.sample_rate = source.sample_rate;
  out.samples.reserve(source.samples.size());
  for (float s : source.samples) out.samples.push_back(s * gain);
  return out;
}

std::string MockAsr::Transcribe(const std::string &record_id,
                                const AudioBuffer &audio) {
  (void)audio;
  auto it = transcripts_.find(record_id);
  if (it == transcripts_.end()) {
    throw Error("mock transcriber: no transcript for record " + record_id);
  }
  std::vector<std::string> words = SplitWhitespace(it->second);
  if (drop_every_ > 0 && words.size() > 2 &&
      Mix64(HashText(record_id)) % static_cast<uint64_t>(drop_every_) == 0) {
    words.erase(words.begin() + 1);
  }
  return Join(words, " ");
}

HttpTtsClient::HttpTtsClient(Options options) : options_(std::move(options)) {
  SplitEndpoint(options_.endpoint, "/synthesize", &host_, &path_);
}

AudioBuffer HttpTtsClient::Synthesize(const std::string &normalized_text,
                                      Locale locale,
                                      const std::string &voice_id) {
  httplib::Client client(host_);
  client.set_read_timeout(options_.timeout_sec, 0);
  nlohmann::json body = {{"text", normalized_text},
                         {"locale", LocaleCode(locale)},
                         {"voice", voice_id}};
  auto res = client.Post(path_, body.dump(), "application/json");
  if (!res) throw Error("tts endpoint unreachable: " + host_);
  if (res->status != 200) {
    throw Error("tts endpoint HTTP " + std::to_string(res->status));
  }
  // Body is a WAV file; reuse the parser via a temp file.
  auto tmp = std::filesystem::temp_directory_path() /
             ("ttskit-tts-" + std::to_string(HashText(normalized_text)) +
              ".wav");
  WriteFile(tmp.string(), res->body);
  AudioBuffer buffer = ReadWav(tmp.string());
  std::filesystem::remove(tmp);
  return buffer;
}

namespace {

std::string BufferToWavBytes(const AudioBuffer &buffer, const char *tag) {
  auto tmp = std::filesystem::temp_directory_path() /
             ("ttskit-" + std::string(tag) + "-" +
              std::to_string(HashText(tag) ^ buffer.samples.size()) + ".wav");
  WriteWav(tmp.string(), buffer);
  std::string bytes = ReadFile(tmp.string());
  std::filesystem::remove(tmp);
  return bytes;
}

}  // namespace

HttpToneConverter::HttpToneConverter(Options options)
    : options_(std::move(options)) {
  SplitEndpoint(options_.endpoint, "/convert", &host_, &path_);
}

AudioBuffer HttpToneConverter::Convert(const AudioBuffer &source,
                                       const AudioBuffer &reference) {
  nlohmann::json body = {
      {"source_wav", Base64Encode(BufferToWavBytes(source, "tone-src"))},
      {"reference_wav", Base64Encode(BufferToWavBytes(reference, "tone-ref"))}};
  httplib::Client client(host_);
  client.set_read_timeout(options_.timeout_sec, 0);
  auto res = client.Post(path_, body.dump(), "application/json");
  if (!res) throw Error("tone endpoint unreachable: " + host_);
  if (res->status != 200) {
    throw Error("tone endpoint HTTP " + std::to_string(res->status));
  }
  auto tmp = std::filesystem::temp_directory_path() / "ttskit-tone-out.wav";
  WriteFile(tmp.string(), res->body);
  AudioBuffer out = ReadWav(tmp.string());
  std::filesystem::remove(tmp);
  return out;
}

HttpAsrClient::HttpAsrClient(Options options) : options_(std::move(options)) {
  SplitEndpoint(options_.endpoint, "/transcribe", &host_, &path_);
}

std::string HttpAsrClient::Transcribe(const std::string &record_id,
                                      const AudioBuffer &audio) {
  auto tmp = std::filesystem::temp_directory_path() /
             ("ttskit-asr-" + record_id + ".wav");
  WriteWav(tmp.string(), audio);
  std::string wav = ReadFile(tmp.string());
  std::filesystem::remove(tmp);

  httplib::Client client(host_);
  client.set_read_timeout(options_.timeout_sec, 0);
  auto res = client.Post(path_, wav, "audio/wav");
  if (!res) throw Error("asr endpoint unreachable: " + host_);
  if (res->status != 200) {
    throw Error("asr endpoint HTTP " + std::to_string(res->status));
  }
  nlohmann::json reply =
      nlohmann::json::parse(res->body, nullptr, /*allow_exceptions=*/false);
  if (reply.is_discarded() || !reply.contains("text")) {
    throw Error("asr endpoint returned malformed JSON");
  }
  return reply["text"].get<std::string>();
}

}  // namespace ttskit
