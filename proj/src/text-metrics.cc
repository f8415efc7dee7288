// src/text-metrics.cc

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

#include "ttskit/text-metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "ttskit/seed-tree.h"
#include "ttskit/util.h"

namespace ttskit {

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    unsigned char u = static_cast<unsigned char>(c);
    if (IsAsciiAlpha(c) || IsAsciiDigit(c)) {
      cur += c;
      ++i;
    } else if (u >= 0xC2 && i + 1 < text.size()) {
      cur += text[i];
      cur += text[i + 1];
      i += 2;
    } else if (c == '\'' && !cur.empty() && i + 1 < text.size() &&
               IsAsciiAlpha(text[i + 1])) {
      cur += c;
      ++i;
    } else {
      if (!cur.empty()) tokens.push_back(FoldCase(cur));
      cur.clear();
      ++i;
    }
  }
  if (!cur.empty()) tokens.push_back(FoldCase(cur));
  return tokens;
}

double Ttr(const std::vector<std::string> &tokens) {
  if (tokens.empty()) throw Error("ttr: empty token list");
  std::unordered_set<std::string> unique(tokens.begin(), tokens.end());
  return static_cast<double>(unique.size()) /
         static_cast<double>(tokens.size());
}

double Mattr(const std::vector<std::string> &tokens, size_t window) {
  if (tokens.empty()) throw Error("mattr: empty token list");
  if (window == 0) throw Error("mattr: zero window");
  if (tokens.size() <= window) return Ttr(tokens);

  std::unordered_map<std::string, size_t> counts;
  size_t distinct = 0;
  for (size_t i = 0; i < window; ++i) {
    if (++counts[tokens[i]] == 1) ++distinct;
  }
  double sum = static_cast<double>(distinct) / static_cast<double>(window);
  size_t windows = tokens.size() - window + 1;
  for (size_t start = 1; start < windows; ++start) {
    if (--counts[tokens[start - 1]] == 0) --distinct;
    if (++counts[tokens[start + window - 1]] == 1) ++distinct;
    sum += static_cast<double>(distinct) / static_cast<double>(window);
  }
  return sum / static_cast<double>(windows);
}

std::vector<double> HashEmbedding::Embed(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  Rng rng(h);
  std::vector<double> v(dim_);
  double norm2 = 0.0;
  for (auto &x : v) {
    x = rng.Unit() * 2.0 - 1.0;
    norm2 += x * x;
  }
  double norm = std::sqrt(norm2);
  if (norm > 0) {
    for (auto &x : v) x /= norm;
  } else {
    v[0] = 1.0;
  }
  return v;
}

double Cosine(const std::vector<double> &a, const std::vector<double> &b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error("cosine: dimension mismatch");
  }
  double dot = 0, na = 0, nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0 || nb == 0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

namespace {

double MeanPairwiseCosine(const std::vector<std::vector<double>> &emb) {
  double sum = 0.0;
  size_t pairs = 0;
  for (size_t i = 0; i < emb.size(); ++i) {
    for (size_t j = i + 1; j < emb.size(); ++j) {
      sum += Cosine(emb[i], emb[j]);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

}  // namespace

SimilarityReport GroupedSimilarity(const std::vector<LabeledText> &records,
                                   EmbeddingClient *embedder) {
  std::map<std::string, std::vector<std::vector<double>>> groups;
  std::vector<std::vector<double>> all;
  for (const auto &rec : records) {
    std::vector<double> e = embedder->Embed(rec.text);
    groups[rec.group].push_back(e);
    all.push_back(std::move(e));
  }

  SimilarityReport report;
  double sum = 0.0;
  size_t eligible = 0;
  for (const auto &[key, emb] : groups) {
    if (emb.size() < 2) {
      report.excluded_groups.push_back(key);
      continue;
    }
    GroupSimilarity g;
    g.key = key;
    g.size = emb.size();
    g.mean = MeanPairwiseCosine(emb);
    sum += g.mean;
    ++eligible;
    report.groups.push_back(std::move(g));
  }
  if (eligible == 0) {
    throw Error("grouped similarity: no group with at least two members");
  }
  report.grouped_mean = sum / static_cast<double>(eligible);
  report.grouped_max =
      std::max_element(report.groups.begin(), report.groups.end(),
                       [](const GroupSimilarity &a, const GroupSimilarity &b) {
                         return a.mean < b.mean;
                       })
          ->mean;
  if (all.size() >= 2) report.ungrouped_mean = MeanPairwiseCosine(all);
  return report;
}

double UngroupedSimilarity(const std::vector<std::string> &texts,
                           EmbeddingClient *embedder) {
  if (texts.size() < 2) {
    throw Error("ungrouped similarity: need at least two texts");
  }
  std::vector<std::vector<double>> emb;
  emb.reserve(texts.size());
  for (const auto &t : texts) emb.push_back(embedder->Embed(t));
  return MeanPairwiseCosine(emb);
}

namespace {

std::string Canonicalize(std::string_view text, bool ignore_commas) {
  std::string s = FoldCase(text);
  if (ignore_commas) {
    std::string out;
    for (char c : s) {
      if (c != ',') out += c;
    }
    s = std::move(out);
  }
  return CollapseWhitespace(s);
}

}  // namespace

NormAccuracyReport NormalizationAccuracy(
    const std::vector<std::string> &predictions,
    const std::vector<std::string> &ground_truth,
    const NormAccuracyOptions &options) {
  if (predictions.size() != ground_truth.size()) {
    throw Error("normalization accuracy: prediction/ground-truth mismatch: " +
                std::to_string(predictions.size()) + " vs " +
                std::to_string(ground_truth.size()));
  }
  NormAccuracyReport report;
  report.total = predictions.size();
  for (size_t i = 0; i < predictions.size(); ++i) {
    if (Canonicalize(predictions[i], options.ignore_commas) ==
        Canonicalize(ground_truth[i], options.ignore_commas)) {
      ++report.matched;
    } else {
      report.mismatch_indices.push_back(i);
    }
  }
  report.accuracy = report.total == 0
                        ? 0.0
                        : static_cast<double>(report.matched) /
                              static_cast<double>(report.total);
  return report;
}

}  // namespace ttskit
