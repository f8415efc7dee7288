// src/phonemizer.cc

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

#include "ttskit/phonemizer.h"

#include <fstream>

#include "ttskit/util.h"

namespace ttskit {

namespace {

const char *kArpabet[] = {"AA", "AE", "AH", "AO", "AW", "AY", "B",  "CH",
                          "D",  "DH", "EH", "ER", "EY", "F",  "G",  "HH",
                          "IH", "IY", "JH", "K",  "L",  "M",  "N",  "NG",
                          "OW", "OY", "P",  "R",  "S",  "SH", "T",  "TH",
                          "UH", "UW", "V",  "W",  "Y",  "Z",  "ZH"};

const char *kSpanishPhones[] = {"a", "e",  "i",  "o",  "u",  "p",
                                "b", "t",  "d",  "k",  "g",  "f",
                                "s", "T",  "x",  "tS", "m",  "n",
                                "NY", "l", "LL", "R",  "RR", "j",
                                "w"};

// English letter-to-sound fallback: digraphs first, then single letters.
// Crude but total and deterministic; the shipped lexicon covers common
// words so the fallback only handles the long tail.
const std::pair<const char *, const char *> kEnDigraphs[] = {
    {"ch", "CH"}, {"sh", "SH"}, {"th", "TH"}, {"ph", "F"},  {"wh", "W"},
    {"ck", "K"},  {"ng", "NG"}, {"qu", "K W"}, {"ee", "IY"}, {"oo", "UW"},
    {"ea", "IY"}, {"ai", "EY"}, {"ay", "EY"},  {"oa", "OW"}, {"ou", "AW"},
    {"oi", "OY"}, {"oy", "OY"}, {"au", "AO"},  {"aw", "AO"}, {"ew", "UW"}};

const char *EnLetterPhone(char c) {
  switch (c) {
    case 'a': return "AE";
    case 'b': return "B";
    case 'c': return "K";
    case 'd': return "D";
    case 'e': return "EH";
    case 'f': return "F";
    case 'g': return "G";
    case 'h': return "HH";
    case 'i': return "IH";
    case 'j': return "JH";
    case 'k': return "K";
    case 'l': return "L";
    case 'm': return "M";
    case 'n': return "N";
    case 'o': return "AA";
    case 'p': return "P";
    case 'q': return "K";
    case 'r': return "R";
    case 's': return "S";
    case 't': return "T";
    case 'u': return "AH";
    case 'v': return "V";
    case 'w': return "W";
    case 'x': return "K S";
    case 'y': return "IY";
    case 'z': return "Z";
    default: return "";
  }
}

bool IsVowelChar(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

void AppendPhones(std::string_view phones, PhonemeSeq *out) {
  for (const auto &p : SplitWhitespace(phones)) out->push_back(p);
}

PhonemeSeq EnglishFallback(std::string_view word) {
  std::string w = ToLowerAscii(StripAccents(word));
  std::string letters;
  for (char c : w) {
    if (IsAsciiLower(c)) letters += c;
  }
  // Silent final e after a consonant ("spade", "nine").
  if (letters.size() > 3 && letters.back() == 'e' &&
      !IsVowelChar(letters[letters.size() - 2])) {
    letters.pop_back();
  }
  PhonemeSeq out;
  size_t i = 0;
  while (i < letters.size()) {
    bool matched = false;
    if (i + 1 < letters.size()) {
      std::string bi = letters.substr(i, 2);
      for (const auto &[gr, ph] : kEnDigraphs) {
        if (bi == gr) {
          AppendPhones(ph, &out);
          i += 2;
          matched = true;
          break;
        }
      }
      // Doubled consonants collapse.
      if (!matched && letters[i] == letters[i + 1] &&
          !IsVowelChar(letters[i])) {
        AppendPhones(EnLetterPhone(letters[i]), &out);
        i += 2;
        matched = true;
      }
    }
    if (!matched) {
      const char *ph =
          (i == 0 && letters[i] == 'y') ? "Y" : EnLetterPhone(letters[i]);
      AppendPhones(ph, &out);
      ++i;
    }
  }
  return out;
}

PhonemeSeq SpanishWord(std::string_view word) {
  // Work on folded codepoints; tilde n becomes its own marker first so
  // accent stripping cannot erase it.
  std::string w = FoldCase(word);
  std::string flat;
  size_t i = 0;
  while (i < w.size()) {
    if (w.compare(i, 2, "ñ") == 0) {
      flat += '~';
      i += 2;
    } else {
      flat += w[i];
      ++i;
    }
  }
  flat = ToLowerAscii(StripAccents(flat));
  std::string letters;
  for (char c : flat) {
    if (IsAsciiLower(c) || c == '~') letters += c;
  }

  PhonemeSeq out;
  size_t n = letters.size();
  for (size_t k = 0; k < n; ++k) {
    char c = letters[k];
    char next = k + 1 < n ? letters[k + 1] : '\0';
    switch (c) {
      case 'a': out.push_back("a"); break;
      case 'e': out.push_back("e"); break;
      case 'i': out.push_back("i"); break;
      case 'o': out.push_back("o"); break;
      case 'u': out.push_back("u"); break;
      case '~': out.push_back("NY"); break;
      case 'b': case 'v': out.push_back("b"); break;
      case 'c':
        if (next == 'h') {
          out.push_back("tS");
          ++k;
        } else if (next == 'e' || next == 'i') {
          out.push_back("T");
        } else {
          out.push_back("k");
        }
        break;
      case 'd': out.push_back("d"); break;
      case 'f': out.push_back("f"); break;
      case 'g':
        if (next == 'e' || next == 'i') {
          out.push_back("x");
        } else if (next == 'u' && k + 2 < n &&
                   (letters[k + 2] == 'e' || letters[k + 2] == 'i')) {
          out.push_back("g");  // guerra: the u is silent
          ++k;
        } else {
          out.push_back("g");
        }
        break;
      case 'h': break;  // silent
      case 'j': out.push_back("x"); break;
      case 'k': out.push_back("k"); break;
      case 'l':
        if (next == 'l') {
          out.push_back("LL");
          ++k;
        } else {
          out.push_back("l");
        }
        break;
      case 'm': out.push_back("m"); break;
      case 'n': out.push_back("n"); break;
      case 'p': out.push_back("p"); break;
      case 'q':
        out.push_back("k");  // que / qui: the u is silent
        if (next == 'u') ++k;
        break;
      case 'r':
        if (next == 'r') {
          out.push_back("RR");
          ++k;
        } else {
          out.push_back(k == 0 ? "RR" : "R");
        }
        break;
      case 's': out.push_back("s"); break;
      case 't': out.push_back("t"); break;
      case 'w': out.push_back("w"); break;
      case 'x':
        out.push_back("k");
        out.push_back("s");
        break;
      case 'y':
        if (k + 1 == n) {
          out.push_back("i");
        } else {
          out.push_back("j");
        }
        break;
      case 'z': out.push_back("T"); break;
      default: break;
    }
  }
  return out;
}

// Letters (ASCII or multibyte) grouped into words; everything else splits.
std::vector<std::string> LetterWords(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  size_t i = 0;
  while (i < text.size()) {
    unsigned char u = static_cast<unsigned char>(text[i]);
    if (IsAsciiAlpha(text[i])) {
      cur += text[i];
      ++i;
    } else if (u >= 0xC2 && i + 1 < text.size()) {
      cur += text[i];
      cur += text[i + 1];
      i += 2;
    } else if (text[i] == '\'' && !cur.empty() && i + 1 < text.size() &&
               IsAsciiAlpha(text[i + 1])) {
      ++i;  // apostrophes join but do not sound
    } else {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
      ++i;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

}  // namespace

Phonemizer::Phonemizer() : Phonemizer(DataDir()) {}

Phonemizer::Phonemizer(const std::string &data_dir) {
  for (const char *p : kArpabet) inventory_en_.insert(p);
  for (const char *p : kSpanishPhones) inventory_es_.insert(p);

  std::string path = data_dir + "/pron_en.tsv";
  std::ifstream in(path);
  if (!in) throw IoError("pronunciation lexicon missing: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    auto cols = Split(line, '\t');
    if (cols.size() != 2) {
      throw ParseError("pron_en.tsv: expected word<TAB>phones: " + line);
    }
    PhonemeSeq seq;
    for (const auto &p : SplitWhitespace(cols[1])) {
      if (!inventory_en_.count(p)) {
        throw ParseError("pron_en.tsv: phone outside inventory: " + p);
      }
      seq.push_back(p);
    }
    lexicon_en_[ToLowerAscii(cols[0])] = std::move(seq);
  }
}

PhonemeSeq Phonemizer::Word(std::string_view word, Locale loc) const {
  if (loc == Locale::kSpanish) return SpanishWord(word);
  auto it = lexicon_en_.find(ToLowerAscii(StripAccents(word)));
  if (it != lexicon_en_.end()) return it->second;
  return EnglishFallback(word);
}

std::vector<PhonemeSeq> Phonemizer::WordPhonemes(std::string_view text,
                                                 Locale loc) const {
  std::vector<PhonemeSeq> out;
  for (const auto &word : LetterWords(text)) {
    PhonemeSeq seq = Word(word, loc);
    if (!seq.empty()) out.push_back(std::move(seq));
  }
  return out;
}

const std::set<Phoneme> &Phonemizer::Inventory(Locale loc) const {
  return loc == Locale::kEnglish ? inventory_en_ : inventory_es_;
}

std::set<std::pair<Phoneme, Phoneme>> DiphoneSet(
    const std::vector<std::string> &texts, Locale loc,
    const Phonemizer &phonemizer) {
  std::set<std::pair<Phoneme, Phoneme>> diphones;
  for (const auto &text : texts) {
    for (const auto &word : phonemizer.WordPhonemes(text, loc)) {
      for (size_t i = 0; i + 1 < word.size(); ++i) {
        diphones.emplace(word[i], word[i + 1]);
      }
    }
  }
  return diphones;
}

size_t DiphoneCoverage(const std::vector<std::string> &texts, Locale loc,
                       const Phonemizer &phonemizer) {
  return DiphoneSet(texts, loc, phonemizer).size();
}

}  // namespace ttskit
