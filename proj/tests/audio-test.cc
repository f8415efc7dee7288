// tests/audio-test.cc

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

#include <cmath>
#include <filesystem>

#include "gtest/gtest.h"
#include "ttskit/audio-clients.h"
#include "ttskit/seed-tree.h"
#include "ttskit/util.h"

namespace ttskit {
namespace {

// Exhaustive alignment oracle: plain recursion over the three edit moves.
size_t OracleEditCost(const std::vector<std::string> &ref,
                      const std::vector<std::string> &hyp, size_t i, size_t j) {
  if (i == 0) return j;
  if (j == 0) return i;
  size_t sub = OracleEditCost(ref, hyp, i - 1, j - 1) +
               (ref[i - 1] == hyp[j - 1] ? 0 : 1);
  size_t del = OracleEditCost(ref, hyp, i - 1, j) + 1;
  size_t ins = OracleEditCost(ref, hyp, i, j - 1) + 1;
  return std::min({sub, del, ins});
}

// A buffer whose frames are exactly quiet (|s| = quiet_amp) for the first
// `quiet_frames` frames and exactly loud afterwards, with alternate-sign
// samples so each fully-quiet or fully-loud frame has constant power.
AudioBuffer TwoLevelBuffer(int sample_rate, size_t total_frames,
                           size_t quiet_frames, float quiet_amp,
                           float loud_amp) {
  size_t frame = static_cast<size_t>(0.025 * sample_rate);
  size_t hop = static_cast<size_t>(0.010 * sample_rate);
  size_t total = hop * (total_frames - 1) + frame;
  size_t quiet_samples = hop * (quiet_frames - 1) + frame;
  AudioBuffer buf;
  buf.sample_rate = sample_rate;
  buf.samples.resize(total);
  for (size_t i = 0; i < total; ++i) {
    float amp = i < quiet_samples ? quiet_amp : loud_amp;
    buf.samples[i] = (i % 2 == 0) ? amp : -amp;
  }
  return buf;
}

TEST(Wav, RoundTripBitExact) {
  AudioBuffer buf;
  buf.sample_rate = 24000;
  Rng rng(8);
  for (int i = 0; i < 48000; ++i) {
    // Values on the 16-bit PCM grid.
    int16_t v = static_cast<int16_t>(rng.Below(65536) - 32768);
    buf.samples.push_back(static_cast<float>(v) / 32768.0f);
  }
  auto path = std::filesystem::temp_directory_path() / "ttskit-wav-test.wav";
  WriteWav(path.string(), buf);
  AudioBuffer back = ReadWav(path.string());
  ASSERT_EQ(back.sample_rate, buf.sample_rate);
  ASSERT_EQ(back.samples.size(), buf.samples.size());
  for (size_t i = 0; i < buf.samples.size(); ++i) {
    ASSERT_EQ(back.samples[i], buf.samples[i]) << i;
  }
  std::filesystem::remove(path);
}

TEST(Wav, RejectsBadRateAndBadFile) {
  AudioBuffer buf;
  buf.sample_rate = 12345;
  buf.samples.assign(100, 0.0f);
  EXPECT_THROW(WriteWav("/tmp/ttskit-bad.wav", buf), Error);

  auto path = std::filesystem::temp_directory_path() / "ttskit-not-wav.wav";
  WriteFile(path.string(), "definitely not a wav file");
  EXPECT_THROW(ReadWav(path.string()), ParseError);
  std::filesystem::remove(path);
}

TEST(Snr, HundredToOnePowerRatioIsTwentyDb) {
  // 300 frames, exactly 30 of them quiet -> the quietest decile is the
  // quiet region and the power ratio is (10x amplitude)^2 = 100.
  AudioBuffer buf = TwoLevelBuffer(16000, 300, 30, 0.03f, 0.3f);
  double snr = EstimateSnrDb(buf);
  EXPECT_NEAR(snr, 20.0, 0.5);
}

TEST(Snr, GainScalingInvariance) {
  AudioBuffer buf = TwoLevelBuffer(16000, 200, 20, 0.02f, 0.4f);
  double base = EstimateSnrDb(buf);
  AudioBuffer doubled = buf;
  for (float &s : doubled.samples) s *= 2.0f;
  EXPECT_NEAR(EstimateSnrDb(doubled), base, 1e-6);
  AudioBuffer scaled = buf;
  for (float &s : scaled.samples) s *= 0.371f;
  EXPECT_NEAR(EstimateSnrDb(scaled), base, 1e-6);
}

TEST(Snr, SineWithKnownNoiseFloor) {
  // 440 Hz sine (25 ms frames hold exactly 11 cycles) over a uniform noise
  // floor, with leading noise-only frames. Expected ratio:
  // (A^2/2 + Pn) / Pn with Pn = b^2/3 for uniform noise in [-b, b].
  const int rate = 16000;
  const double amp = 0.4, noise_amp = 0.01;
  AudioBuffer buf;
  buf.sample_rate = rate;
  Rng rng(33);
  size_t noise_only = static_cast<size_t>(0.5 * rate);
  size_t voiced = static_cast<size_t>(3.0 * rate);
  for (size_t i = 0; i < noise_only; ++i) {
    buf.samples.push_back(
        static_cast<float>(noise_amp * (2.0 * rng.Unit() - 1.0)));
  }
  for (size_t i = 0; i < voiced; ++i) {
    double t = static_cast<double>(i) / rate;
    buf.samples.push_back(static_cast<float>(
        amp * std::sin(2.0 * M_PI * 440.0 * t) +
        noise_amp * (2.0 * rng.Unit() - 1.0)));
  }
  double noise_power = noise_amp * noise_amp / 3.0;
  double expected =
      10.0 * std::log10((amp * amp / 2.0 + noise_power) / noise_power);
  EXPECT_NEAR(EstimateSnrDb(buf), expected, 1.0);
}

TEST(Snr, ErrorsOnSilentOrTinyBuffers) {
  AudioBuffer silent;
  silent.sample_rate = 16000;
  silent.samples.assign(16000, 0.0f);
  EXPECT_THROW(EstimateSnrDb(silent), Error);

  AudioBuffer tiny;
  tiny.sample_rate = 16000;
  tiny.samples.assign(800, 0.1f);  // two frames only
  EXPECT_THROW(EstimateSnrDb(tiny), Error);
}

TEST(Wer, SpecExamples) {
  EXPECT_NEAR(WerPercent({"a", "b", "c"}, {"a", "x", "c"}), 100.0 / 3.0,
              1e-9);
  EXPECT_DOUBLE_EQ(WerPercent({"a", "b"}, {"a", "b"}), 0.0);
  EXPECT_DOUBLE_EQ(WerPercent({"a", "b"}, {"a", "b", "c"}), 50.0);
  EXPECT_DOUBLE_EQ(WerPercent({"a", "b"}, {}), 100.0);
  EXPECT_THROW(WerPercent({}, {"a"}), Error);
}

TEST(Wer, SubstitutionFirstTieBreak) {
  WerCounts counts = WerAlignment({"a", "b", "c"}, {"a", "x", "c"});
  EXPECT_EQ(counts.substitutions, 1u);
  EXPECT_EQ(counts.deletions, 0u);
  EXPECT_EQ(counts.insertions, 0u);
}

TEST(Wer, MatchesExhaustiveOracleUpToLengthFour) {
  const char *alphabet[] = {"a", "b", "c"};
  std::vector<std::vector<std::string>> seqs = {{}};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto &s : seqs) {
      if (s.size() == static_cast<size_t>(len - 1)) {
        for (const char *c : alphabet) {
          auto t = s;
          t.push_back(c);
          next.push_back(t);
        }
      }
    }
    seqs.insert(seqs.end(), next.begin(), next.end());
  }
  for (const auto &ref : seqs) {
    if (ref.empty()) continue;
    for (const auto &hyp : seqs) {
      size_t oracle = OracleEditCost(ref, hyp, ref.size(), hyp.size());
      ASSERT_EQ(WerAlignment(ref, hyp).total(), oracle);
    }
  }
}

TEST(MockClients, SynthesisShapeAndSnr) {
  MockTts tts;
  MockToneConverter tone;
  AudioBuffer ref = tts.ReferenceVoice("female");
  AudioBuffer out = SynthesizeStandardized(
      &tts, &tone, "seven eight five four zero one", Locale::kEnglish, ref);
  EXPECT_EQ(out.sample_rate, 24000);
  EXPECT_GT(out.duration_sec(), 0.5);
  // Tones over a quiet noise floor: comfortably positive SNR.
  EXPECT_GT(EstimateSnrDb(out), 10.0);
}

TEST(MockClients, EmptyTextFailsBeforeClients) {
  MockTts tts;
  MockToneConverter tone;
  AudioBuffer ref = tts.ReferenceVoice("male");
  EXPECT_THROW(SynthesizeStandardized(&tts, &tone, "   ", Locale::kEnglish,
                                      ref),
               Error);
}

TEST(MockClients, CrossLingualReferenceAccepted) {
  MockTts tts;
  MockToneConverter tone;
  // English reference voice standardizing Spanish text.
  AudioBuffer ref = tts.ReferenceVoice("male-english");
  AudioBuffer out = SynthesizeStandardized(
      &tts, &tone, "quinientos setenta y dos", Locale::kSpanish, ref);
  EXPECT_GT(out.samples.size(), 0u);
}

// Converters must keep the sample rate and stay within 10% of the source
// duration.
TEST(MockClients, ConverterContractViolationsCaught) {
  class Truncating : public ToneConverterClient {
   public:
    AudioBuffer Convert(const AudioBuffer &source,
                        const AudioBuffer &) override {
      AudioBuffer out;
      out.sample_rate = source.sample_rate;
      out.samples.assign(source.samples.begin(),
                         source.samples.begin() +
                             static_cast<long>(source.samples.size() / 2));
      return out;
    }
  };
  class Resampling : public ToneConverterClient {
   public:
    AudioBuffer Convert(const AudioBuffer &source,
                        const AudioBuffer &) override {
      AudioBuffer out = source;
      out.sample_rate = 16000;
      return out;
    }
  };
  MockTts tts;
  AudioBuffer ref = tts.ReferenceVoice("v");
  Truncating truncating;
  EXPECT_THROW(SynthesizeStandardized(&tts, &truncating, "some words here",
                                      Locale::kEnglish, ref),
               Error);
  Resampling resampling;
  EXPECT_THROW(SynthesizeStandardized(&tts, &resampling, "some words here",
                                      Locale::kEnglish, ref),
               Error);
}

TEST(MockClients, DeterministicSynthesis) {
  MockTts tts;
  AudioBuffer a = tts.Synthesize("same words here", Locale::kEnglish, "v1");
  AudioBuffer b = tts.Synthesize("same words here", Locale::kEnglish, "v1");
  ASSERT_EQ(a.samples.size(), b.samples.size());
  EXPECT_EQ(a.samples, b.samples);
}

// The tone-conversion wire format ships WAVs as base64.
TEST(Base64, RoundTrip) {
  EXPECT_EQ(Base64Encode(""), "");
  EXPECT_EQ(Base64Encode("f"), "Zg==");
  EXPECT_EQ(Base64Encode("foob"), "Zm9vYg==");
  Rng rng(4);
  for (int len = 0; len < 64; ++len) {
    std::string bytes;
    for (int i = 0; i < len; ++i) {
      bytes += static_cast<char>(rng.Below(256));
    }
    EXPECT_EQ(Base64Decode(Base64Encode(bytes)), bytes);
  }
  EXPECT_THROW(Base64Decode("a$b"), ParseError);
}

TEST(MockClients, TranscriberDropsDeterministically) {
  std::map<std::string, std::string> transcripts = {
      {"r1", "alpha beta gamma delta"}};
  MockAsr asr(transcripts, 1);  // always drop
  AudioBuffer dummy;
  EXPECT_EQ(asr.Transcribe("r1", dummy), "alpha gamma delta");
  MockAsr no_drop(transcripts, 0);
  EXPECT_EQ(no_drop.Transcribe("r1", dummy), "alpha beta gamma delta");
  EXPECT_THROW(no_drop.Transcribe("unknown", dummy), Error);
}

}  // namespace
}  // namespace ttskit
