// src/audio.cc

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

#include "ttskit/audio.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>

#include "ttskit/util.h"

namespace ttskit {

namespace {

void PutU32(std::string *out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>(v >> (8 * i)));
}

void PutU16(std::string *out, uint16_t v) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>(v >> 8));
}

uint32_t GetU32(const std::string &s, size_t pos) {
  return static_cast<uint8_t>(s[pos]) |
         (static_cast<uint8_t>(s[pos + 1]) << 8) |
         (static_cast<uint8_t>(s[pos + 2]) << 16) |
         (static_cast<uint32_t>(static_cast<uint8_t>(s[pos + 3])) << 24);
}

uint16_t GetU16(const std::string &s, size_t pos) {
  return static_cast<uint16_t>(static_cast<uint8_t>(s[pos]) |
                               (static_cast<uint8_t>(s[pos + 1]) << 8));
}

}  // namespace

bool IsSupportedSampleRate(int rate) {
  return rate == 16000 || rate == 22050 || rate == 24000 || rate == 44100;
}

void WriteWav(const std::string &path, const AudioBuffer &buffer) {
  if (!IsSupportedSampleRate(buffer.sample_rate)) {
    throw Error("WriteWav: unsupported sample rate " +
                std::to_string(buffer.sample_rate));
  }
  const uint32_t data_bytes = static_cast<uint32_t>(buffer.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  PutU32(&out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  PutU32(&out, 16);
  PutU16(&out, 1);  // PCM
  PutU16(&out, 1);  // mono
  PutU32(&out, static_cast<uint32_t>(buffer.sample_rate));
  PutU32(&out, static_cast<uint32_t>(buffer.sample_rate * 2));
  PutU16(&out, 2);   // block align
  PutU16(&out, 16);  // bits per sample
  out += "data";
  PutU32(&out, data_bytes);
  for (float s : buffer.samples) {
    long v = std::lrintf(s * 32768.0f);
    v = std::clamp(v, -32768L, 32767L);
    PutU16(&out, static_cast<uint16_t>(static_cast<int16_t>(v)));
  }
  WriteFile(path, out);
}

AudioBuffer ReadWav(const std::string &path) {
  std::string blob = ReadFile(path);
  if (blob.size() < 44 || blob.compare(0, 4, "RIFF") != 0 ||
      blob.compare(8, 4, "WAVE") != 0) {
    throw ParseError("ReadWav: not a RIFF/WAVE file: " + path);
  }
  size_t pos = 12;
  AudioBuffer buffer;
  bool have_fmt = false;
  while (pos + 8 <= blob.size()) {
    std::string id = blob.substr(pos, 4);
    uint32_t size = GetU32(blob, pos + 4);
    pos += 8;
    if (pos + size > blob.size()) {
      throw ParseError("ReadWav: truncated chunk in " + path);
    }
    if (id == "fmt ") {
      if (size < 16) throw ParseError("ReadWav: short fmt chunk");
      uint16_t format = GetU16(blob, pos);
      uint16_t channels = GetU16(blob, pos + 2);
      uint32_t rate = GetU32(blob, pos + 4);
      uint16_t bits = GetU16(blob, pos + 14);
      if (format != 1 || channels != 1 || bits != 16) {
        throw ParseError("ReadWav: expected 16-bit PCM mono: " + path);
      }
      buffer.sample_rate = static_cast<int>(rate);
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw ParseError("ReadWav: data before fmt");
      size_t n = size / 2;
      buffer.samples.resize(n);
      for (size_t i = 0; i < n; ++i) {
        int16_t v = static_cast<int16_t>(GetU16(blob, pos + 2 * i));
        buffer.samples[i] = static_cast<float>(v) / 32768.0f;
      }
      return buffer;
    }
    pos += size + (size & 1);
  }
  throw ParseError("ReadWav: no data chunk in " + path);
}

double EstimateSnrDb(const AudioBuffer &buffer, const SnrOptions &options) {
  size_t frame = static_cast<size_t>(options.frame_sec * buffer.sample_rate);
  size_t hop = static_cast<size_t>(options.hop_sec * buffer.sample_rate);
  if (frame == 0 || hop == 0) throw Error("EstimateSnrDb: bad frame/hop");
  if (buffer.samples.size() < frame + 9 * hop) {
    throw Error("EstimateSnrDb: buffer shorter than ten frames");
  }
  std::vector<double> powers;
  for (size_t start = 0; start + frame <= buffer.samples.size();
       start += hop) {
    double sum = 0.0;
    for (size_t i = 0; i < frame; ++i) {
      double s = buffer.samples[start + i];
      sum += s * s;
    }
    powers.push_back(sum / static_cast<double>(frame));
  }
  std::sort(powers.begin(), powers.end());
  size_t noise_frames = std::max<size_t>(
      1, static_cast<size_t>(powers.size() * options.noise_fraction));
  double noise = 0.0, signal = 0.0;
  for (size_t i = 0; i < noise_frames; ++i) noise += powers[i];
  for (size_t i = noise_frames; i < powers.size(); ++i) signal += powers[i];
  noise /= static_cast<double>(noise_frames);
  signal /= static_cast<double>(powers.size() - noise_frames);
  constexpr double kSilence = 1e-14;
  if (noise < kSilence && signal < kSilence) {
    throw Error("EstimateSnrDb: all-silent buffer");
  }
  if (noise < kSilence) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal / noise);
}

WerCounts WerAlignment(const std::vector<std::string> &reference,
                       const std::vector<std::string> &hypothesis) {
  const size_t n = reference.size(), m = hypothesis.size();
  // cost[i][j] = edits to align ref[0..i) with hyp[0..j).
  std::vector<std::vector<size_t>> cost(n + 1, std::vector<size_t>(m + 1));
  for (size_t i = 0; i <= n; ++i) cost[i][0] = i;
  for (size_t j = 0; j <= m; ++j) cost[0][j] = j;
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      size_t sub = cost[i - 1][j - 1] +
                   (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      cost[i][j] = std::min({sub, cost[i - 1][j] + 1, cost[i][j - 1] + 1});
    }
  }
  // Backtrace, preferring substitution/match on ties.
  WerCounts counts;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      size_t sub = cost[i - 1][j - 1] +
                   (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      if (cost[i][j] == sub) {
        if (reference[i - 1] != hypothesis[j - 1]) ++counts.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && cost[i][j] == cost[i - 1][j] + 1) {
      ++counts.deletions;
      --i;
      continue;
    }
    ++counts.insertions;
    --j;
  }
  return counts;
}

double WerPercent(const std::vector<std::string> &reference,
                  const std::vector<std::string> &hypothesis) {
  if (reference.empty()) throw Error("WerPercent: empty reference");
  WerCounts counts = WerAlignment(reference, hypothesis);
  return 100.0 * static_cast<double>(counts.total()) /
         static_cast<double>(reference.size());
}

}  // namespace ttskit
