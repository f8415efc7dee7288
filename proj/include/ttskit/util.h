// include/ttskit/util.h

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

#ifndef TTSKIT_UTIL_H_
#define TTSKIT_UTIL_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ttskit {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string &msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string &msg) : Error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &msg) : Error(msg) {}
};

inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAsciiAlpha(char c) { return IsAsciiUpper(c) || IsAsciiLower(c); }
inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string ToLowerAscii(std::string_view s);

// Lowercases ASCII letters and the accented Latin-1 / Latin Extended
// letters used by the Spanish lexicons (Á É Í Ó Ú Ü Ñ and friends).
// Other codepoints pass through unchanged.
std::string FoldCase(std::string_view s);

// Strips combining marks from the Latin letters above: Jiménez -> Jimenez.
std::string StripAccents(std::string_view s);

std::string Trim(std::string_view s);
std::string CollapseWhitespace(std::string_view s);
std::vector<std::string> SplitWhitespace(std::string_view s);
std::vector<std::string> Split(std::string_view s, char sep);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);

bool ContainsCaseInsensitive(std::string_view haystack, std::string_view needle);

std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view contents);

// Data directory resolution: TTSKIT_DATA env var wins, then the
// compiled-in default (the source tree's data/ directory).
std::string DataDir();

// Fixed-width decimal id, e.g. RecordId(7) == "r0000007".
std::string RecordId(uint64_t index);

std::string Base64Encode(std::string_view bytes);
std::string Base64Decode(std::string_view text);  // throws ParseError

}  // namespace ttskit

#endif  // TTSKIT_UTIL_H_
