// src/locale.cc

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

#include "ttskit/locale.h"

#include "ttskit/util.h"

namespace ttskit {

std::string LocaleCode(Locale loc) {
  return loc == Locale::kEnglish ? "en" : "es";
}

std::string LocaleName(Locale loc) {
  return loc == Locale::kEnglish ? "English" : "Spanish";
}

Locale ParseLocale(std::string_view s) {
  std::string v = ToLowerAscii(s);
  if (v == "en" || v == "english") return Locale::kEnglish;
  if (v == "es" || v == "spanish") return Locale::kSpanish;
  throw ConfigError("unknown locale: " + std::string(s));
}

}  // namespace ttskit
