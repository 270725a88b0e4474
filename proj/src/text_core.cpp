// Copyright 2026 the Persian readability toolkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "readability/text_core.hpp"

#include <algorithm>
#include <cctype>

#include "readability/error.hpp"
#include "readability/unicode.hpp"

namespace readability {

namespace uni = unicode;

std::size_t TokenizedDocument::word_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

namespace {

char32_t map_codepoint(char32_t c) {
  if (c == uni::kArabicKaf) return uni::kPersianKaf;
  if (c == uni::kArabicYeh) return uni::kPersianYeh;
  if (c >= 0x0660 && c <= 0x0669) return U'0' + (c - 0x0660);
  if (c >= 0x06F0 && c <= 0x06F9) return U'0' + (c - 0x06F0);
  return c;
}

bool is_dropped(char32_t c) {
  return c == uni::kTatweel || uni::is_combining_diacritic(c);
}

bool is_sentence_terminator(char32_t c) {
  return c == U'.' || c == U'!' || c == U'?' || c == 0x061F /* ؟ */ ||
         c == 0x203C /* ‼ */ || c == 0x2026 /* … */;
}

bool has_word_char(const std::vector<char32_t>& cps) {
  return std::any_of(cps.begin(), cps.end(),
                     [](char32_t c) { return uni::is_word_char(c); });
}

}  // namespace

std::string normalize(std::string_view text) {
  // Map and drop first so that a stripped character between two whitespace
  // runs does not leave a double space behind.
  std::vector<char32_t> cps;
  for (char32_t raw : uni::decode_utf8(text)) {
    const char32_t c = map_codepoint(raw);
    if (!is_dropped(c)) cps.push_back(c);
  }
  std::vector<char32_t> out;
  out.reserve(cps.size());
  std::size_t i = 0;
  while (i < cps.size()) {
    if (uni::is_whitespace(cps[i])) {
      std::size_t newlines = 0;
      while (i < cps.size() && uni::is_whitespace(cps[i])) {
        if (cps[i] == U'\n') ++newlines;
        ++i;
      }
      if (!out.empty()) {
        if (newlines >= 2) {
          out.push_back(U'\n');
          out.push_back(U'\n');
        } else {
          out.push_back(U' ');
        }
      }
      continue;
    }
    out.push_back(cps[i]);
    ++i;
  }
  while (!out.empty() && uni::is_whitespace(out.back())) out.pop_back();
  if (out.empty()) throw EmptyDocument("document empty after normalization");
  return uni::encode_utf8(out);
}

std::vector<std::string> split_sentences(std::string_view normalized) {
  const auto cps = uni::decode_utf8(normalized);
  std::vector<std::string> sentences;
  std::vector<char32_t> current;
  auto flush = [&] {
    if (has_word_char(current)) sentences.push_back(uni::encode_utf8(current));
    current.clear();
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (is_sentence_terminator(cps[i])) {
      flush();
      continue;
    }
    if (cps[i] == U'\n' && i + 1 < cps.size() && cps[i + 1] == U'\n') {
      flush();
      ++i;
      continue;
    }
    current.push_back(cps[i]);
  }
  flush();
  return sentences;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  const auto cps = uni::decode_utf8(sentence);
  std::vector<std::string> tokens;
  std::vector<char32_t> current;
  auto flush = [&] {
    // ZWNJ is token-internal only; strip it from the edges.
    std::size_t b = 0, e = current.size();
    while (b < e && current[b] == uni::kZwnj) ++b;
    while (e > b && current[e - 1] == uni::kZwnj) --e;
    if (e > b) {
      tokens.push_back(
          uni::encode_utf8({current.begin() + b, current.begin() + e}));
    }
    current.clear();
  };
  for (char32_t c : cps) {
    if (uni::is_word_char(c)) {
      current.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::size_t count_syllables(std::string_view token) {
  const auto cps = uni::decode_utf8(token);
  std::size_t nuclei = 0;
  bool has_letter = false;
  for (char32_t c : cps) {
    if (uni::is_letter(c)) has_letter = true;
    if (uni::is_vowel_nucleus(c)) ++nuclei;
  }
  if (!cps.empty() && cps.back() == uni::kHeh) ++nuclei;
  if (!has_letter) return nuclei;
  return std::max<std::size_t>(nuclei, 1);
}

TokenizedDocument tokenize_document(const RawDocument& raw) {
  TokenizedDocument doc;
  doc.id = raw.id;
  const std::string norm = normalize(raw.text);
  for (char32_t c : uni::decode_utf8(norm)) {
    if (!uni::is_whitespace(c)) ++doc.char_count;
    if (uni::is_letter(c)) ++doc.letter_count;
  }
  for (const auto& sentence : split_sentences(norm)) {
    auto tokens = tokenize(sentence);
    if (!tokens.empty()) doc.sentences.push_back(std::move(tokens));
  }
  return doc;
}

TokenizedDocument remove_stopwords(const TokenizedDocument& doc,
                                   const WordSet& stoplist) {
  TokenizedDocument out;
  out.id = doc.id;
  out.char_count = doc.char_count;
  out.letter_count = doc.letter_count;
  for (const auto& sentence : doc.sentences) {
    std::vector<std::string> kept;
    for (const auto& tok : sentence) {
      if (!stoplist.contains(tok)) kept.push_back(tok);
    }
    if (!kept.empty()) out.sentences.push_back(std::move(kept));
  }
  return out;
}

TextStatistics compute_statistics(const TokenizedDocument& doc,
                                  const WordSet& complex_list,
                                  const WordSet& familiar_list) {
  TextStatistics stats;
  stats.letters = doc.letter_count;
  stats.characters = doc.char_count;
  stats.sentences = doc.sentences.size();
  WordSet seen;
  for (const auto& sentence : doc.sentences) {
    for (const auto& tok : sentence) {
      ++stats.words;
      stats.syllables += count_syllables(tok);
      std::string folded = tok;
      std::transform(folded.begin(), folded.end(), folded.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      seen.insert(folded);
      if (complex_list.contains(tok)) ++stats.complex_words;
      if (!familiar_list.contains(tok)) ++stats.difficult_words;
    }
  }
  if (stats.words == 0) throw EmptyDocument("no words in document");
  stats.unique_words = seen.size();
  return stats;
}

}  // namespace readability
