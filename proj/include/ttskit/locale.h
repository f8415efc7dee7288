// include/ttskit/locale.h

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

#ifndef TTSKIT_LOCALE_H_
#define TTSKIT_LOCALE_H_

#include <string>
#include <string_view>

namespace ttskit {

enum class Locale {
  kEnglish,
  kSpanish,
};

enum class Gender {
  kMasculine,
  kFeminine,
};

// "en" / "es"
std::string LocaleCode(Locale loc);
// "English" / "Spanish" (as used in prompt templates)
std::string LocaleName(Locale loc);
// Accepts "en", "es", "english", "spanish" (case-insensitive).
Locale ParseLocale(std::string_view s);

}  // namespace ttskit

#endif  // TTSKIT_LOCALE_H_
