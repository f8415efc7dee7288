// include/ttskit/entity-sampler.h

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

#ifndef TTSKIT_ENTITY_SAMPLER_H_
#define TTSKIT_ENTITY_SAMPLER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ttskit/lexicon.h"
#include "ttskit/locale.h"
#include "ttskit/util.h"

namespace ttskit {

enum class SemioticClass {
  kAddress,
  kPhoneNumber,
  kEmail,
  kUrl,
  kDate,
  kTime,
  kPercentage,
  kAmount,
  kPersonWithSalutation,
};

inline constexpr int kNumSemioticClasses = 9;

std::string SemioticClassName(SemioticClass cls);
SemioticClass ParseSemioticClass(std::string_view name);
const std::vector<SemioticClass> &AllSemioticClasses();

struct EntitySample {
  SemioticClass cls;
  Locale locale;
  std::string surface;     // written form
  std::string normalized;  // spoken form, built alongside the surface
  std::string recipe_id;   // format variant used, e.g. "phone.en.plain10"
  uint64_t seed = 0;
};

// Raised by Verbalize when a surface does not match any recipe grammar for
// the class; the message names the class and what the grammar expected.
class VerbalizeError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Generates randomized surface forms of semiotic classes together with
// their normalized spoken forms. Both forms are assembled field by field
// from the same draws, so the spoken form never has to be recovered from
// the written one. Verbalize re-derives the spoken form by parsing a
// surface; Sample guarantees consistency with it by construction.
class EntitySampler {
 public:
  EntitySampler();  // uses Lexicons::Default()
  explicit EntitySampler(const Lexicons *lexicons);

  // Deterministic: the same (class, locale, seed) reproduces both strings.
  EntitySample Sample(SemioticClass cls, Locale loc, uint64_t seed) const;

  // Parses a surface form and produces the spoken form Sample would have
  // attached to it. Throws VerbalizeError on unparseable input.
  std::string Verbalize(SemioticClass cls, Locale loc,
                        std::string_view surface) const;

 private:
  const Lexicons *lex_;
  // Folded single-word names usable in email local parts.
  std::vector<std::string> email_first_en_, email_last_en_;
  std::vector<std::string> email_first_es_, email_last_es_;
};

}  // namespace ttskit

#endif  // TTSKIT_ENTITY_SAMPLER_H_
