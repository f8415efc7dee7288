// src/keyphrase-store.cc

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

#include "ttskit/keyphrase-store.h"

#include <algorithm>
#include <fstream>

#include "ttskit/util.h"

namespace ttskit {

namespace {

std::vector<uint32_t> DecodeUtf8(std::string_view s) {
  std::vector<uint32_t> cps;
  cps.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    uint32_t cp = c;
    size_t len = 1;
    if ((c >> 5) == 0x6) len = 2;
    else if ((c >> 4) == 0xe) len = 3;
    else if ((c >> 3) == 0x1e) len = 4;
    if (len > 1 && i + len <= s.size()) {
      cp = c & (0x7f >> len);
      for (size_t k = 1; k < len; ++k) {
        cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3f);
      }
    } else {
      len = 1;
    }
    cps.push_back(cp);
    i += len;
  }
  return cps;
}

std::string SortedTokenString(std::string_view s) {
  auto tokens = SplitWhitespace(FoldCase(s));
  std::sort(tokens.begin(), tokens.end());
  return Join(tokens, " ");
}

std::string Sanitize(std::string_view phrase) {
  std::string out;
  for (char c : phrase) out += (c == '\t' || c == '\n' || c == '\r') ? ' ' : c;
  return CollapseWhitespace(out);
}

}  // namespace

size_t EditDistance(std::string_view a, std::string_view b) {
  std::vector<uint32_t> x = DecodeUtf8(a), y = DecodeUtf8(b);
  if (x.size() < y.size()) std::swap(x, y);
  std::vector<size_t> row(y.size() + 1);
  for (size_t j = 0; j <= y.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= x.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= y.size(); ++j) {
      size_t cost = (x[i - 1] == y[j - 1]) ? diag : diag + 1;
      diag = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, cost});
    }
  }
  return row[y.size()];
}

double TokenSortRatio(std::string_view a, std::string_view b) {
  std::string sa = SortedTokenString(a);
  std::string sb = SortedTokenString(b);
  if (sa.empty() && sb.empty()) return 1.0;
  size_t la = DecodeUtf8(sa).size();
  size_t lb = DecodeUtf8(sb).size();
  size_t longest = std::max(la, lb);
  if (longest == 0) return 1.0;
  size_t dist = EditDistance(sa, sb);
  return 1.0 - static_cast<double>(dist) / static_cast<double>(longest);
}

KeyphraseStore::InsertResult KeyphraseStore::TryInsert(
    const KeyphraseRecord &record) {
  KeyphraseRecord rec = record;
  rec.phrase = Sanitize(rec.phrase);
  if (rec.phrase.empty()) return {false, ""};
  std::lock_guard<std::mutex> lock(mu_);
  auto &group = groups_[{rec.domain, rec.language}];
  for (const auto &entry : group) {
    if (TokenSortRatio(entry.folded, rec.phrase) >= kSimilarityThreshold) {
      return {false, entry.record.phrase};
    }
  }
  group.push_back({rec, FoldCase(rec.phrase)});
  return {true, ""};
}

size_t KeyphraseStore::CountFor(std::string_view domain,
                                Locale language) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = groups_.find({std::string(domain), language});
  return it == groups_.end() ? 0 : it->second.size();
}

size_t KeyphraseStore::TotalCount() const {
  std::lock_guard<std::mutex> lock(mu_);
  size_t n = 0;
  for (const auto &[key, group] : groups_) n += group.size();
  return n;
}

std::vector<KeyphraseRecord> KeyphraseStore::Sample(std::string_view domain,
                                                    Locale language, size_t k,
                                                    SeedTree *seeds) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<KeyphraseRecord> out;
  if (k == 0) return out;
  auto it = groups_.find({std::string(domain), language});
  if (it == groups_.end() || it->second.size() < k) {
    throw Error("keyphrase store: group " + std::string(domain) + "/" +
                LocaleCode(language) + " holds " +
                std::to_string(it == groups_.end() ? 0 : it->second.size()) +
                " phrases, need " + std::to_string(k));
  }
  std::vector<size_t> indices(it->second.size());
  for (size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  for (size_t i = 0; i < k; ++i) {
    Rng rng(seeds->Next());
    size_t pick = i + rng.Below(indices.size() - i);
    std::swap(indices[i], indices[pick]);
    out.push_back(it->second[indices[i]].record);
  }
  return out;
}

std::vector<KeyphraseRecord> KeyphraseStore::All() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<KeyphraseRecord> out;
  for (const auto &[key, group] : groups_) {
    for (const auto &entry : group) out.push_back(entry.record);
  }
  return out;
}

void KeyphraseStore::Save(const std::string &path) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::string blob;
  for (const auto &[key, group] : groups_) {
    for (const auto &entry : group) {
      const KeyphraseRecord &r = entry.record;
      blob += r.phrase + "\t" + r.domain + "\t" + r.subdomain + "\t" +
              LocaleCode(r.language) + "\t" +
              std::to_string(r.created_by_seed) + "\n";
    }
  }
  WriteFile(path, blob);
}

KeyphraseStore KeyphraseStore::Load(const std::string &path) {
  KeyphraseStore store;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open keyphrase store: " + path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    auto cols = Split(line, '\t');
    if (cols.size() != 5) {
      throw ParseError("keyphrase store " + path + ": line " +
                       std::to_string(lineno) + " needs 5 columns");
    }
    KeyphraseRecord rec;
    rec.phrase = cols[0];
    rec.domain = cols[1];
    rec.subdomain = cols[2];
    rec.language = ParseLocale(cols[3]);
    try {
      rec.created_by_seed = std::stoull(cols[4]);
    } catch (const std::exception &) {
      throw ParseError("keyphrase store " + path + ": line " +
                       std::to_string(lineno) + " has a malformed seed");
    }
    store.TryInsert(rec);
  }
  return store;
}

namespace {

GenerationRequest ChainRequest(std::string prompt, nlohmann::json schema,
                               uint64_t seed_hint, double temperature,
                               double top_p) {
  GenerationRequest req;
  req.messages.push_back({"user", std::move(prompt)});
  req.response_schema = std::move(schema);
  req.seed_hint = seed_hint;
  req.temperature = temperature;
  req.top_p = top_p;
  return req;
}

nlohmann::json StringListSchema(const char *key) {
  return {{"type", "object"},
          {"required", {key}},
          {"properties",
           {{key,
             {{"type", "array"},
              {"minItems", 1},
              {"items", {{"type", "string"}}}}}}}};
}

}  // namespace

ChainResult RunKeyphraseChain(LlmClient *llm, std::string_view domain,
                              Locale language, SeedTree *seeds, size_t cap,
                              double temperature, double top_p) {
  auto step = [&](const char *name, GenerationRequest req) {
    try {
      return llm->Generate(req);
    } catch (const GatewayError &e) {
      throw GatewayError(e.kind(), std::string("keyphrase chain step '") +
                                       name + "': " + e.what());
    }
  };

  GenerationResponse subs = step(
      "subdomains",
      ChainRequest("List 8 distinct subdomains of the " + std::string(domain) +
                       " business domain. Respond as JSON with a "
                       "\"subdomains\" array of strings.",
                   StringListSchema("subdomains"), seeds->Next(), temperature,
                   top_p));
  std::vector<std::string> subdomains =
      (*subs.parsed)["subdomains"].get<std::vector<std::string>>();

  // The random pick is made here with a secondary seed rather than by the
  // model, so a replay selects the same subdomain.
  Rng pick(seeds->Next());
  const std::string &subdomain = subdomains[pick.Below(subdomains.size())];

  nlohmann::json para_schema = {
      {"type", "object"},
      {"required", {"paragraph"}},
      {"properties", {{"paragraph", {{"type", "string"}}}}}};
  GenerationResponse para = step(
      "paragraph",
      ChainRequest("Write one short creative paragraph in " +
                       LocaleName(language) + " language about " + subdomain +
                       ". Respond as JSON with a \"paragraph\" string.",
                   para_schema, seeds->Next(), temperature, top_p));
  std::string paragraph = (*para.parsed)["paragraph"].get<std::string>();

  GenerationResponse keys = step(
      "keyphrases",
      ChainRequest("Extract the most relevant domain-specific keyphrases "
                   "from the following paragraph. Respond as JSON with a "
                   "\"keyphrases\" array of strings. Paragraph: " +
                       paragraph,
                   StringListSchema("keyphrases"), seeds->Next(), temperature,
                   top_p));

  ChainResult result;
  result.subdomain = subdomain;
  for (auto &phrase :
       (*keys.parsed)["keyphrases"].get<std::vector<std::string>>()) {
    if (result.keyphrases.size() >= cap) break;
    result.keyphrases.push_back(std::move(phrase));
  }
  return result;
}

void ReplenishKeyphrases(KeyphraseStore *store, LlmClient *llm,
                         std::string_view domain, Locale language, size_t need,
                         SeedTree *seeds, int max_rounds, double temperature,
                         double top_p) {
  for (int round = 0; round < max_rounds; ++round) {
    if (store->CountFor(domain, language) >= need) return;
    ChainResult chain =
        RunKeyphraseChain(llm, domain, language, seeds, 10, temperature, top_p);
    for (const auto &phrase : chain.keyphrases) {
      KeyphraseRecord rec;
      rec.phrase = phrase;
      rec.domain = std::string(domain);
      rec.subdomain = chain.subdomain;
      rec.language = language;
      rec.created_by_seed = seeds->Next();
      store->TryInsert(rec);
    }
  }
  if (store->CountFor(domain, language) < need) {
    throw Error("keyphrase replenishment for " + std::string(domain) + "/" +
                LocaleCode(language) + " still short of " +
                std::to_string(need) + " phrases after budget");
  }
}

}  // namespace ttskit
