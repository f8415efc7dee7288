// include/ttskit/post-normalize.h

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

#ifndef TTSKIT_POST_NORMALIZE_H_
#define TTSKIT_POST_NORMALIZE_H_

#include <string>
#include <string_view>
#include <unordered_set>

#include "ttskit/locale.h"

namespace ttskit {

// Post-processing normalizer for semiotic material the language model
// introduced on its own: acronym expansion, non-contextual number-to-cardinal
// conversion, and stripping of hyphens, underscores and brackets. Number
// conversion is deliberately non-contextual ("in 2023" becomes a plain
// cardinal); the residual errors this causes are a known property of the
// approach, not something this module tries to detect.
struct PostNormConfig {
  Locale locale = Locale::kEnglish;
  // All-caps ASCII tokens with length in [min,max] and not whitelisted are
  // spelled letter by letter. The whitelist is data (acronym_whitelist.txt).
  std::unordered_set<std::string> acronym_whitelist;
  size_t acronym_min_len = 2;
  size_t acronym_max_len = 6;

  static PostNormConfig ForLocale(Locale loc);
};

// Total function: never throws on any UTF-8 input. Idempotent. Output
// contains no ASCII digits and none of - _ ( ) [ ], with whitespace
// collapsed and sentence-initial capitalization restored.
std::string PostNormalize(std::string_view text, const PostNormConfig &cfg);

inline bool IsFixpoint(std::string_view text, const PostNormConfig &cfg) {
  return PostNormalize(text, cfg) == text;
}

}  // namespace ttskit

#endif  // TTSKIT_POST_NORMALIZE_H_
