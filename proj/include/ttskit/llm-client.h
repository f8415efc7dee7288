// include/ttskit/llm-client.h

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

#ifndef TTSKIT_LLM_CLIENT_H_
#define TTSKIT_LLM_CLIENT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ttskit/util.h"

namespace ttskit {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

struct GenerationRequest {
  std::vector<ChatMessage> messages;
  double temperature = 1.2;
  double top_p = 0.9;
  int max_tokens = 512;
  // When present, the response must parse as JSON matching this schema;
  // the client validates and retries with a fresh seed hint.
  std::optional<nlohmann::json> response_schema;
  uint64_t seed_hint = 0;
};

struct GenerationResponse {
  std::string text;
  std::optional<nlohmann::json> parsed;  // set when a schema was supplied
};

enum class GatewayErrorKind {
  kNetwork,
  kHttp,
  kSchemaViolation,
  kBadConfig,
};

class GatewayError : public Error {
 public:
  GatewayError(GatewayErrorKind kind, const std::string &msg)
      : Error(msg), kind_(kind) {}
  GatewayErrorKind kind() const { return kind_; }

 private:
  GatewayErrorKind kind_;
};

// Validates a JSON value against the subset of JSON Schema the pipeline
// issues: type, required, properties, items, minItems, maxItems, enum.
bool MatchesSchema(const nlohmann::json &value, const nlohmann::json &schema);

// Digest over messages, sampling parameters and schema; excludes seed_hint
// so mock playback can be a pure function of (digest, seed_hint).
uint64_t RequestDigest(const GenerationRequest &req);

// Chat-style text generation client. Generate() runs the schema
// validate-and-retry loop (fresh seed hints seed_hint+1, +2, ...) around the
// transport implemented by GenerateOnce(); downstream code never consumes
// free-form model text when a schema was requested.
class LlmClient {
 public:
  virtual ~LlmClient() = default;

  GenerationResponse Generate(const GenerationRequest &req);

  int max_schema_retries() const { return max_schema_retries_; }
  void set_max_schema_retries(int n) { max_schema_retries_ = n; }

 protected:
  virtual GenerationResponse GenerateOnce(const GenerationRequest &req) = 0;

 private:
  int max_schema_retries_ = 3;
};

// JSON-over-HTTP chat-completions client (the de facto local inference
// server shape). The response schema is forwarded as response_format so
// servers with constrained decoding can enforce it; other servers are
// covered by the validate-and-retry loop.
class HttpLlmClient : public LlmClient {
 public:
  struct Options {
    std::string endpoint;  // e.g. "http://localhost:8000/v1/chat/completions"
    std::string api_key;   // optional bearer token
    std::string model;     // optional model name forwarded to the server
    int timeout_sec = 120;

    // TTSKIT_LLM_URL / TTSKIT_LLM_KEY / TTSKIT_LLM_MODEL
    static Options FromEnv();
  };

  explicit HttpLlmClient(Options options);

 protected:
  GenerationResponse GenerateOnce(const GenerationRequest &req) override;

 private:
  Options options_;
  std::string host_;  // scheme://host:port
  std::string path_;
};

// Offline stand-in. Fixture entries keyed by request digest win; anything
// else is answered by the template engine, which recognizes the pipeline's
// prompt shapes (subdomain listing, paragraph writing, keyphrase
// extraction, script generation) and fabricates deterministic output that
// honors the requested schema, keyphrases, and entities.
class MockLlm : public LlmClient {
 public:
  MockLlm() = default;

  // Raw response text served for every request whose digest matches.
  void AddFixture(uint64_t digest, std::string response_text);
  void LoadFixtures(const std::string &path);  // JSON: {"<digest>": "text"}

 protected:
  GenerationResponse GenerateOnce(const GenerationRequest &req) override;

 private:
  std::map<uint64_t, std::string> fixtures_;
};

}  // namespace ttskit

#endif  // TTSKIT_LLM_CLIENT_H_
