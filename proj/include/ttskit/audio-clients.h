// include/ttskit/audio-clients.h

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

#ifndef TTSKIT_AUDIO_CLIENTS_H_
#define TTSKIT_AUDIO_CLIENTS_H_

#include <map>
#include <string>

#include "ttskit/audio.h"
#include "ttskit/locale.h"

namespace ttskit {

// Service contracts for the speech side. The models themselves are
// external; these seams carry everything the pipeline needs from them.

class TtsClient {
 public:
  virtual ~TtsClient() = default;
  virtual AudioBuffer Synthesize(const std::string &normalized_text,
                                 Locale locale,
                                 const std::string &voice_id) = 0;
};

// Re-renders audio in the reference speaker's timbre. Language agnostic:
// the reference may be speech in a different language than the source.
// Implementations must preserve the sample rate exactly and the duration
// within 10%.
class ToneConverterClient {
 public:
  virtual ~ToneConverterClient() = default;
  virtual AudioBuffer Convert(const AudioBuffer &source,
                              const AudioBuffer &reference) = 0;
};

class AsrClient {
 public:
  virtual ~AsrClient() = default;
  virtual std::string Transcribe(const std::string &record_id,
                                 const AudioBuffer &audio) = 0;
};

// Base synthesis followed by tone conversion, with the contract checks:
// empty text fails before any client call, and a converter that changes
// the sample rate or shifts duration by more than 10% is an error.
AudioBuffer SynthesizeStandardized(TtsClient *tts, ToneConverterClient *tone,
                                   const std::string &normalized_text,
                                   Locale locale,
                                   const AudioBuffer &reference_voice);

// Deterministic offline synthesizer: one tone per word (frequency derived
// from the word and voice id) over a low noise floor, with silent-ish gaps
// between words. Good enough to exercise WAV handling and SNR estimation.
class MockTts : public TtsClient {
 public:
  explicit MockTts(int sample_rate = 24000, float noise_floor = 0.004f)
      : sample_rate_(sample_rate), noise_floor_(noise_floor) {}
  AudioBuffer Synthesize(const std::string &normalized_text, Locale locale,
                         const std::string &voice_id) override;

  // Deterministic reference voice sample for a voice id.
  AudioBuffer ReferenceVoice(const std::string &voice_id);

 private:
  int sample_rate_;
  float noise_floor_;
};

// Deterministic timbre shift: amplitude coloration derived from the
// reference buffer; duration and sample rate are preserved exactly.
class MockToneConverter : public ToneConverterClient {
 public:
  AudioBuffer Convert(const AudioBuffer &source,
                      const AudioBuffer &reference) override;
};

// Offline transcript provider: answers with the stored normalized text,
// deterministically dropping one word for a fixed fraction of record ids so
// evaluation reports a nonzero word error rate. A live ASR endpoint
// replaces this in real measurements.
class MockAsr : public AsrClient {
 public:
  MockAsr(std::map<std::string, std::string> transcripts, int drop_every = 7)
      : transcripts_(std::move(transcripts)), drop_every_(drop_every) {}
  std::string Transcribe(const std::string &record_id,
                         const AudioBuffer &audio) override;

 private:
  std::map<std::string, std::string> transcripts_;
  int drop_every_;
};

// POST {text, locale, voice} -> audio/wav body.
class HttpTtsClient : public TtsClient {
 public:
  struct Options {
    std::string endpoint;
    int timeout_sec = 120;
  };
  explicit HttpTtsClient(Options options);
  AudioBuffer Synthesize(const std::string &normalized_text, Locale locale,
                         const std::string &voice_id) override;

 private:
  Options options_;
  std::string host_, path_;
};

// POST {"source_wav": b64, "reference_wav": b64} -> audio/wav body.
class HttpToneConverter : public ToneConverterClient {
 public:
  struct Options {
    std::string endpoint;
    int timeout_sec = 120;
  };
  explicit HttpToneConverter(Options options);
  AudioBuffer Convert(const AudioBuffer &source,
                      const AudioBuffer &reference) override;

 private:
  Options options_;
  std::string host_, path_;
};

// POST audio/wav -> {"text": "..."}.
class HttpAsrClient : public AsrClient {
 public:
  struct Options {
    std::string endpoint;
    int timeout_sec = 120;
  };
  explicit HttpAsrClient(Options options);
  std::string Transcribe(const std::string &record_id,
                         const AudioBuffer &audio) override;

 private:
  Options options_;
  std::string host_, path_;
};

}  // namespace ttskit

#endif  // TTSKIT_AUDIO_CLIENTS_H_
