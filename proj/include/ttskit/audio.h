// include/ttskit/audio.h

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

#ifndef TTSKIT_AUDIO_H_
#define TTSKIT_AUDIO_H_

#include <string>
#include <vector>

namespace ttskit {

// Mono audio, samples in [-1, 1].
struct AudioBuffer {
  std::vector<float> samples;
  int sample_rate = 24000;

  double duration_sec() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

bool IsSupportedSampleRate(int rate);

// RIFF, 16-bit PCM, mono, little-endian. Reading back a written buffer is
// bit-exact for sample values on the 1/32768 grid (everything that came
// from 16-bit PCM).
void WriteWav(const std::string &path, const AudioBuffer &buffer);
AudioBuffer ReadWav(const std::string &path);

struct SnrOptions {
  double frame_sec = 0.025;
  double hop_sec = 0.010;
  // Quietest fraction of frames treated as noise-only.
  double noise_fraction = 0.10;
};

// Frames the signal, takes the quietest decile of frame powers as the
// noise estimate and the rest as speech, and returns
// 10*log10(P_signal/P_noise). Throws when the buffer is shorter than ten
// frames or when both powers vanish (all-silent input).
double EstimateSnrDb(const AudioBuffer &buffer, const SnrOptions &options = {});

struct WerCounts {
  size_t substitutions = 0;
  size_t deletions = 0;
  size_t insertions = 0;
  size_t total() const { return substitutions + deletions + insertions; }
};

// Minimum-edit-distance word alignment; ties resolve substitution first.
WerCounts WerAlignment(const std::vector<std::string> &reference,
                       const std::vector<std::string> &hypothesis);

// (S + D + I) / N * 100. Throws on an empty reference.
double WerPercent(const std::vector<std::string> &reference,
                  const std::vector<std::string> &hypothesis);

}  // namespace ttskit

#endif  // TTSKIT_AUDIO_H_
