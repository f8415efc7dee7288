// src/llm-client.cc

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

#include "ttskit/llm-client.h"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "httplib.h"
#include "ttskit/seed-tree.h"

namespace ttskit {

namespace {

uint64_t Fnv1a(uint64_t h, std::string_view s) {
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

bool MatchesSchema(const nlohmann::json &value, const nlohmann::json &schema) {
  if (!schema.is_object()) return true;
  if (auto it = schema.find("type"); it != schema.end()) {
    const std::string type = it->get<std::string>();
    if (type == "object" && !value.is_object()) return false;
    if (type == "array" && !value.is_array()) return false;
    if (type == "string" && !value.is_string()) return false;
    if (type == "boolean" && !value.is_boolean()) return false;
    if (type == "integer" && !value.is_number_integer()) return false;
    if (type == "number" && !value.is_number()) return false;
  }
  if (auto it = schema.find("enum"); it != schema.end()) {
    bool found = false;
    for (const auto &v : *it) found |= (v == value);
    if (!found) return false;
  }
  if (value.is_object()) {
    if (auto it = schema.find("required"); it != schema.end()) {
      for (const auto &key : *it) {
        if (!value.contains(key.get<std::string>())) return false;
      }
    }
    if (auto it = schema.find("properties"); it != schema.end()) {
      for (auto prop = it->begin(); prop != it->end(); ++prop) {
        if (value.contains(prop.key()) &&
            !MatchesSchema(value.at(prop.key()), prop.value())) {
          return false;
        }
      }
    }
  }
  if (value.is_array()) {
    if (auto it = schema.find("minItems");
        it != schema.end() && value.size() < it->get<size_t>()) {
      return false;
    }
    if (auto it = schema.find("maxItems");
        it != schema.end() && value.size() > it->get<size_t>()) {
      return false;
    }
    if (auto it = schema.find("items"); it != schema.end()) {
      for (const auto &elem : value) {
        if (!MatchesSchema(elem, *it)) return false;
      }
    }
  }
  return true;
}

uint64_t RequestDigest(const GenerationRequest &req) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto &m : req.messages) {
    h = Fnv1a(h, m.role);
    h = Fnv1a(h, "\x1f");
    h = Fnv1a(h, m.content);
    h = Fnv1a(h, "\x1e");
  }
  h = Fnv1a(h, std::to_string(req.temperature));
  h = Fnv1a(h, std::to_string(req.top_p));
  if (req.response_schema) h = Fnv1a(h, req.response_schema->dump());
  return h;
}

namespace {

// TTSKIT_DEBUG=1 traces requests and responses on stderr. Message bodies
// are elided (prompts can embed user data); sizes and digests identify the
// exchange without leaking content or credentials.
void DebugTrace(const GenerationRequest &req, const GenerationResponse *resp,
                int attempt) {
  static const bool enabled = std::getenv("TTSKIT_DEBUG") != nullptr;
  if (!enabled) return;
  if (!resp) {
    std::fprintf(stderr,
                 "[llm] -> digest=%016llx messages=%zu chars=%zu temp=%.2f "
                 "top_p=%.2f seed=%llu attempt=%d schema=%s\n",
                 static_cast<unsigned long long>(RequestDigest(req)),
                 req.messages.size(),
                 [&] {
                   size_t n = 0;
                   for (const auto &m : req.messages) n += m.content.size();
                   return n;
                 }(),
                 req.temperature, req.top_p,
                 static_cast<unsigned long long>(req.seed_hint), attempt,
                 req.response_schema ? "yes" : "no");
  } else {
    std::fprintf(stderr, "[llm] <- digest=%016llx chars=%zu parsed=%s\n",
                 static_cast<unsigned long long>(RequestDigest(req)),
                 resp->text.size(), resp->parsed ? "yes" : "no");
  }
}

}  // namespace

GenerationResponse LlmClient::Generate(const GenerationRequest &req) {
  if (req.temperature <= 0) {
    throw GatewayError(GatewayErrorKind::kBadConfig, "temperature must be > 0");
  }
  if (req.top_p <= 0 || req.top_p > 1) {
    throw GatewayError(GatewayErrorKind::kBadConfig, "top_p must be in (0, 1]");
  }
  std::string last_error;
  for (int attempt = 0; attempt <= max_schema_retries_; ++attempt) {
    GenerationRequest r = req;
    r.seed_hint = req.seed_hint + static_cast<uint64_t>(attempt);
    DebugTrace(r, nullptr, attempt);
    GenerationResponse resp = GenerateOnce(r);
    DebugTrace(r, &resp, attempt);
    if (!req.response_schema) return resp;
    nlohmann::json parsed =
        nlohmann::json::parse(resp.text, nullptr, /*allow_exceptions=*/false);
    if (!parsed.is_discarded() && MatchesSchema(parsed, *req.response_schema)) {
      resp.parsed = std::move(parsed);
      return resp;
    }
    last_error = resp.text;
  }
  throw GatewayError(
      GatewayErrorKind::kSchemaViolation,
      "response did not match the requested schema after " +
          std::to_string(max_schema_retries_ + 1) +
          " attempts; last: " + last_error.substr(0, 200));
}

// ------------------------------------------------------------------- HTTP

HttpLlmClient::Options HttpLlmClient::Options::FromEnv() {
  Options o;
  if (const char *url = std::getenv("TTSKIT_LLM_URL")) o.endpoint = url;
  if (const char *key = std::getenv("TTSKIT_LLM_KEY")) o.api_key = key;
  if (const char *model = std::getenv("TTSKIT_LLM_MODEL")) o.model = model;
  return o;
}

HttpLlmClient::HttpLlmClient(Options options) : options_(std::move(options)) {
  const std::string &url = options_.endpoint;
  size_t scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw GatewayError(GatewayErrorKind::kBadConfig,
                       "endpoint must be an http(s) URL: " + url);
  }
  size_t path = url.find('/', scheme + 3);
  host_ = path == std::string::npos ? url : url.substr(0, path);
  path_ = path == std::string::npos ? "/v1/chat/completions" : url.substr(path);
}

GenerationResponse HttpLlmClient::GenerateOnce(const GenerationRequest &req) {
  nlohmann::json body;
  if (!options_.model.empty()) body["model"] = options_.model;
  body["messages"] = nlohmann::json::array();
  for (const auto &m : req.messages) {
    body["messages"].push_back({{"role", m.role}, {"content", m.content}});
  }
  body["temperature"] = req.temperature;
  body["top_p"] = req.top_p;
  body["max_tokens"] = req.max_tokens;
  body["seed"] = req.seed_hint;
  if (req.response_schema) {
    body["response_format"] = {
        {"type", "json_schema"},
        {"json_schema",
         {{"name", "response"}, {"schema", *req.response_schema}}}};
  }

  httplib::Client client(host_);
  client.set_read_timeout(options_.timeout_sec, 0);
  client.set_connection_timeout(options_.timeout_sec, 0);
  httplib::Headers headers;
  if (!options_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + options_.api_key);
  }
  auto res = client.Post(path_, headers, body.dump(), "application/json");
  if (!res) {
    throw GatewayError(GatewayErrorKind::kNetwork,
                       "cannot reach " + host_ + ": " +
                           httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw GatewayError(GatewayErrorKind::kHttp,
                       "HTTP " + std::to_string(res->status) + " from " +
                           host_ + path_ + ": " + res->body.substr(0, 200));
  }
  nlohmann::json reply =
      nlohmann::json::parse(res->body, nullptr, /*allow_exceptions=*/false);
  if (reply.is_discarded() || !reply.contains("choices") ||
      reply["choices"].empty()) {
    throw GatewayError(GatewayErrorKind::kHttp,
                       "malformed completion response");
  }
  GenerationResponse out;
  out.text = reply["choices"][0]["message"]["content"].get<std::string>();
  return out;
}

// ------------------------------------------------------------------- mock

namespace {

std::string_view Between(std::string_view text, std::string_view begin,
                         std::string_view end) {
  size_t b = text.find(begin);
  if (b == std::string::npos) return {};
  b += begin.size();
  size_t e = end.empty() ? text.size() : text.find(end, b);
  if (e == std::string::npos) e = text.size();
  return text.substr(b, e - b);
}

bool SchemaRequires(const GenerationRequest &req, const char *key) {
  if (!req.response_schema) return false;
  auto it = req.response_schema->find("properties");
  return it != req.response_schema->end() && it->contains(key);
}

bool IsSpanishPrompt(std::string_view prompt) {
  return prompt.find("Spanish") != std::string_view::npos ||
         prompt.find("español") != std::string_view::npos;
}

const std::vector<std::string> &SubdomainBank() {
  static const auto *v = new std::vector<std::string>{
      "services",   "analytics",  "operations", "logistics",
      "strategy",   "compliance", "innovation", "support",
      "marketing",  "research",   "planning",   "automation"};
  return *v;
}

std::string MakeParagraph(std::string_view topic, bool spanish, Rng &rng) {
  static const char *kEnNouns[] = {"markets",  "customers", "platforms",
                                   "networks", "budgets",   "standards",
                                   "partners", "regions"};
  static const char *kEnVerbs[] = {"reshape",  "accelerate", "balance",
                                   "simplify", "measure",    "connect"};
  static const char *kEsNouns[] = {"mercados", "clientes", "plataformas",
                                   "redes",    "normas",   "regiones",
                                   "proveedores"};
  static const char *kEsVerbs[] = {"transforman", "aceleran", "equilibran",
                                   "simplifican", "conectan"};
  std::string t(topic);
  if (spanish) {
    return "El área de " + t + " " + kEsVerbs[rng.Below(5)] + " los " +
           kEsNouns[rng.Below(7)] + " mientras los " + kEsNouns[rng.Below(7)] +
           " buscan nuevas ideas sobre " + t + " y los " +
           kEsNouns[rng.Below(7)] + " cercanos.";
  }
  return "Modern " + t + " teams " + kEnVerbs[rng.Below(6)] + " their " +
         kEnNouns[rng.Below(8)] + " while " + kEnNouns[rng.Below(8)] +
         " around " + t + " keep testing fresh approaches with " +
         kEnNouns[rng.Below(8)] + " nearby.";
}

std::vector<std::string> ExtractBigrams(std::string_view paragraph, Rng &rng) {
  static const std::unordered_set<std::string> kStop = {
      "the",  "their",    "while",  "with",     "nearby", "keep",
      "fresh", "around",  "los",    "las",      "sobre",  "nuevas",
      "ideas", "de",      "el",     "la",       "area",   "área",
      "y",     "mientras", "buscan", "cercanos", "teams"};
  std::vector<std::string> words;
  for (auto &w : SplitWhitespace(paragraph)) {
    std::string clean;
    for (char c : w) {
      if (IsAsciiAlpha(c) || static_cast<unsigned char>(c) >= 0x80) clean += c;
    }
    clean = FoldCase(clean);
    if (clean.size() >= 3 && !kStop.count(clean)) words.push_back(clean);
  }
  std::vector<std::string> bigrams;
  for (size_t i = 0; i + 1 < words.size(); ++i) {
    bigrams.push_back(words[i] + " " + words[i + 1]);
  }
  if (bigrams.empty()) bigrams = words;
  if (!bigrams.empty()) {
    // Rotate deterministically so different seeds surface different phrases.
    size_t shift = rng.Below(bigrams.size());
    std::rotate(bigrams.begin(),
                bigrams.begin() + static_cast<ptrdiff_t>(shift),
                bigrams.end());
  }
  if (bigrams.size() > 6) bigrams.resize(6);
  return bigrams;
}

enum class PromptKind {
  kStatement,
  kExclamation,
  kQuestion,
  kPhrase,
  kUtterance
};

PromptKind ClassifyPrompt(std::string_view prompt) {
  if (prompt.find("exclamatory") != std::string_view::npos) {
    return PromptKind::kExclamation;
  }
  if (prompt.find("question") != std::string_view::npos) {
    return PromptKind::kQuestion;
  }
  if (prompt.find("phrase") != std::string_view::npos) {
    return PromptKind::kPhrase;
  }
  if (prompt.find("conversation") != std::string_view::npos) {
    return PromptKind::kUtterance;
  }
  return PromptKind::kStatement;
}

std::string JoinList(std::string_view csv, bool spanish) {
  std::vector<std::string> items;
  std::string s(csv);
  size_t b = 0;
  while (b <= s.size()) {
    size_t e = s.find(", ", b);
    if (e == std::string::npos) e = s.size();
    std::string item = Trim(s.substr(b, e - b));
    if (!item.empty()) items.push_back(item);
    if (e == s.size()) break;
    b = e + 2;
  }
  std::string sep = spanish ? " y " : " and ";
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += (i + 1 == items.size()) ? sep : std::string(", ");
    out += items[i];
  }
  return out;
}

std::string MakeScript(std::string_view prompt, Rng &rng) {
  bool spanish = IsSpanishPrompt(prompt);
  PromptKind kind = ClassifyPrompt(prompt);
  std::string domain =
      Trim(std::string(Between(prompt, " language in ", " domain")));
  if (domain.empty()) domain = spanish ? "negocios" : "business";

  std::string words_clause =
      Trim(std::string(Between(prompt, "the following words: ", ".")));
  std::string entity_clause = Trim(
      std::string(Between(prompt, "should also be present in the text: ", "")));
  // The entity clause runs to the end of its sentence; cut instruction
  // tails that follow it. Entity surfaces may themselves contain periods.
  for (const char *cut : {". The generated sentence", ". The phrase",
                          ". It should", ". I am well aware"}) {
    size_t pos = entity_clause.find(cut);
    if (pos != std::string::npos) entity_clause = entity_clause.substr(0, pos);
  }
  if (!entity_clause.empty() && entity_clause.back() == '.') {
    entity_clause.pop_back();
  }
  std::string words = JoinList(words_clause, spanish);
  std::string entities = JoinList(entity_clause, spanish);

  static const char *kEnFiller[] = {"careful",  "recent",   "practical",
                                    "steady",   "detailed", "regional"};
  static const char *kEsFiller[] = {"reciente",  "práctico", "constante",
                                    "detallado", "regional", "cuidadoso"};
  std::string filler =
      spanish ? kEsFiller[rng.Below(6)] : kEnFiller[rng.Below(6)];

  auto fill = [&](const char *tpl) {
    std::string s;
    for (size_t i = 0; tpl[i]; ++i) {
      if (tpl[i] == '%' && tpl[i + 1]) {
        switch (tpl[++i]) {
          case 'W': s += words; break;
          case 'E': s += entities; break;
          case 'D': s += domain; break;
          case 'F': s += filler; break;
          default: s += tpl[i];
        }
      } else {
        s += tpl[i];
      }
    }
    return s;
  };

  // Baseline prompts carry no keyphrases or entities.
  if (words.empty() && entities.empty()) {
    static const char *kEnBase[] = {
        "The %D market keeps adjusting its %F outlook as analysts compare "
        "plans for the coming season.",
        "Teams across the %D sector share a %F playbook and review their "
        "progress together every month.",
        "A %F review of the %D landscape suggests steady demand and careful "
        "planning ahead."};
    static const char *kEsBase[] = {
        "El mercado de %D ajusta su panorama %F mientras los analistas "
        "comparan planes para la próxima temporada.",
        "Los equipos del sector %D comparten un plan %F y revisan sus "
        "avances cada mes.",
        "Una revisión %F del sector %D sugiere demanda estable y planes "
        "cuidadosos para el futuro."};
    std::string out = fill(spanish ? kEsBase[rng.Below(3)] : kEnBase[rng.Below(3)]);
    if (kind == PromptKind::kExclamation && !out.empty()) out.back() = '!';
    if (kind == PromptKind::kQuestion && !out.empty()) out.back() = '?';
    return out;
  }

  if (spanish) {
    switch (kind) {
      case PromptKind::kQuestion:
        return fill("¿Cómo influye %W en los planes %F del sector %D cuando "
                    "aparece %E en el informe?");
      case PromptKind::kExclamation:
        return fill("¡Qué cambio tan %F trajo %W al sector %D justo cuando "
                    "llegó %E!");
      case PromptKind::kPhrase:
        return fill("resumen %F de %W");
      case PromptKind::kUtterance:
        return fill("Ana: ¿Ya revisaste %W para el área de %D? Luis: Sí, y "
                    "%E cambió mi opinión por completo.");
      default:
        return fill("En el sector %D, %W marcan una pauta %F mientras %E "
                    "aparece en el nuevo informe mensual.");
    }
  }
  switch (kind) {
    case PromptKind::kQuestion:
      return fill("How will %W steer %F plans across the %D sector once %E "
                  "shows up in the report?");
    case PromptKind::kExclamation:
      return fill("What a %F shift %W brought to %D teams right after %E "
                  "arrived!");
    case PromptKind::kPhrase:
      return fill("%F overview of %W today");
    case PromptKind::kUtterance:
      return fill("Ana: Have you reviewed %W for the %D group yet? Luis: "
                  "Yes, and %E changed my mind completely.");
    default:
      return fill("Across the %D sector, %W set a %F pace while %E appears "
                  "in this month's update.");
  }
}

}  // namespace

void MockLlm::AddFixture(uint64_t digest, std::string response_text) {
  fixtures_[digest] = std::move(response_text);
}

void MockLlm::LoadFixtures(const std::string &path) {
  nlohmann::json j = nlohmann::json::parse(ReadFile(path));
  for (auto it = j.begin(); it != j.end(); ++it) {
    try {
      fixtures_[std::stoull(it.key())] = it.value().get<std::string>();
    } catch (const std::exception &) {
      throw ParseError("fixture file " + path +
                       ": keys must be request digests, got: " + it.key());
    }
  }
}

GenerationResponse MockLlm::GenerateOnce(const GenerationRequest &req) {
  uint64_t digest = RequestDigest(req);
  if (auto it = fixtures_.find(digest); it != fixtures_.end()) {
    return {it->second, std::nullopt};
  }

  Rng rng(Mix64(digest ^ (req.seed_hint * 0x9E3779B97F4A7C15ULL)));
  std::string prompt;
  for (auto it = req.messages.rbegin(); it != req.messages.rend(); ++it) {
    if (it->role == "user") {
      prompt = it->content;
      break;
    }
  }

  nlohmann::json out;
  if (SchemaRequires(req, "subdomains")) {
    std::string domain = Trim(std::string(
        Between(prompt, "subdomains of the ", " business domain")));
    if (domain.empty()) domain = "general";
    const auto &bank = SubdomainBank();
    size_t start = rng.Below(bank.size());
    out["subdomains"] = nlohmann::json::array();
    for (size_t i = 0; i < 8; ++i) {
      out["subdomains"].push_back(domain + " " +
                                  bank[(start + i) % bank.size()]);
    }
    return {out.dump(), std::nullopt};
  }
  if (SchemaRequires(req, "paragraph")) {
    std::string topic = Trim(std::string(Between(prompt, "about ", ".")));
    if (topic.empty()) topic = "the field";
    out["paragraph"] = MakeParagraph(topic, IsSpanishPrompt(prompt), rng);
    return {out.dump(), std::nullopt};
  }
  if (SchemaRequires(req, "keyphrases")) {
    std::string paragraph =
        Trim(std::string(Between(prompt, "Paragraph: ", "")));
    out["keyphrases"] = ExtractBigrams(paragraph, rng);
    return {out.dump(), std::nullopt};
  }
  if (SchemaRequires(req, "text")) {
    out["text"] = MakeScript(prompt, rng);
    return {out.dump(), std::nullopt};
  }
  return {MakeScript(prompt, rng), std::nullopt};
}

}  // namespace ttskit
