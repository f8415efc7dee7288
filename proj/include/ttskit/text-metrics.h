// include/ttskit/text-metrics.h

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

#ifndef TTSKIT_TEXT_METRICS_H_
#define TTSKIT_TEXT_METRICS_H_

#include <string>
#include <string_view>
#include <vector>

namespace ttskit {

// Rule tokenizer: word characters (letters, digits, multibyte letters) plus
// apostrophe clusters, case-folded. TTR numbers are comparable only within
// this toolkit since the tokenizer is part of the metric.
std::vector<std::string> Tokenize(std::string_view text);

// Unique / total. Throws ttskit::Error on an empty token list.
double Ttr(const std::vector<std::string> &tokens);

// Mean TTR over every contiguous window; shorter streams degrade to plain
// TTR. Throws on an empty token list.
double Mattr(const std::vector<std::string> &tokens, size_t window = 100);

// Text to unit-norm fixed-dimension vector. Same text, same vector.
class EmbeddingClient {
 public:
  virtual ~EmbeddingClient() = default;
  virtual std::vector<double> Embed(std::string_view text) = 0;
  virtual size_t dimension() const = 0;
};

// Deterministic hash-to-unit-vector stand-in for a sentence embedding
// model; makes every similarity measurement reproducible offline. Scores
// are internally consistent but not comparable to any external model's.
class HashEmbedding : public EmbeddingClient {
 public:
  explicit HashEmbedding(size_t dim = 64) : dim_(dim) {}
  std::vector<double> Embed(std::string_view text) override;
  size_t dimension() const override { return dim_; }

 private:
  size_t dim_;
};

double Cosine(const std::vector<double> &a, const std::vector<double> &b);

struct GroupSimilarity {
  std::string key;
  size_t size = 0;
  double mean = 0.0;  // mean pairwise cosine over unordered pairs
};

struct SimilarityReport {
  double grouped_mean = 0.0;    // unweighted mean of per-group means
  double grouped_max = 0.0;     // most homogeneous group's mean
  double ungrouped_mean = 0.0;  // mean pairwise cosine over the whole corpus
  std::vector<GroupSimilarity> groups;
  std::vector<std::string> excluded_groups;  // fewer than two members
};

struct LabeledText {
  std::string group;
  std::string text;
};

// Per-group mean pairwise cosine over unordered pairs, then an unweighted
// mean across groups; groups smaller than two are excluded and reported.
// The whole-corpus ungrouped mean is filled in as well. Throws when no
// group is eligible.
SimilarityReport GroupedSimilarity(const std::vector<LabeledText> &records,
                                   EmbeddingClient *embedder);

// Mean cosine over all unordered pairs. Throws with fewer than two texts.
double UngroupedSimilarity(const std::vector<std::string> &texts,
                           EmbeddingClient *embedder);

struct NormAccuracyOptions {
  // Phone-number normalizations legitimately differ in comma placement
  // between tools; with this flag commas are excluded from penalties.
  bool ignore_commas = false;
};

struct NormAccuracyReport {
  double accuracy = 0.0;  // matched / total
  size_t total = 0;
  size_t matched = 0;
  std::vector<size_t> mismatch_indices;  // for manual review
};

// Exact string match after canonicalization (case fold, whitespace
// collapse, optional comma exemption). Throws on length mismatch.
NormAccuracyReport NormalizationAccuracy(
    const std::vector<std::string> &predictions,
    const std::vector<std::string> &ground_truth,
    const NormAccuracyOptions &options = {});

}  // namespace ttskit

#endif  // TTSKIT_TEXT_METRICS_H_
