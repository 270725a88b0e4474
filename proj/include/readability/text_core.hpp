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

#ifndef READABILITY_TEXT_CORE_HPP
#define READABILITY_TEXT_CORE_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace readability {

struct RawDocument {
  std::string id;
  std::string text;
};

struct TokenizedDocument {
  std::string id;
  std::vector<std::vector<std::string>> sentences;
  std::size_t char_count = 0;    // non-whitespace codepoints
  std::size_t letter_count = 0;  // alphabetic codepoints

  std::size_t word_count() const;
  bool empty() const { return sentences.empty(); }
};

struct TextStatistics {
  std::size_t letters = 0;
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
  std::size_t complex_words = 0;
  std::size_t difficult_words = 0;
  std::size_t unique_words = 0;
  std::size_t characters = 0;
};

using WordSet = std::set<std::string>;

// Canonical Persian form: Arabic kaf/yeh mapped to Persian kaf/yeh,
// Arabic-Indic and Extended Arabic-Indic digits mapped to ASCII, tatweel and
// combining diacritics stripped, whitespace runs collapsed to a single space
// (a run containing a blank line collapses to "\n\n", a sentence boundary).
// Idempotent. Throws EmptyDocument when nothing remains.
std::string normalize(std::string_view text);

// Splits on {. ! ؟ ‼ …} and blank lines. Text with no terminator is one
// sentence; segments with no word characters are dropped.
std::vector<std::string> split_sentences(std::string_view normalized);

// Maximal runs of word characters; ZWNJ is word-internal; punctuation is
// discarded.
std::vector<std::string> tokenize(std::string_view sentence);

// Vowel-nucleus heuristic: count of nucleus letters (ا آ و ی, plus final ه),
// minimum 1 for any token containing a letter.
std::size_t count_syllables(std::string_view token);

// normalize + split_sentences + tokenize, with codepoint counts.
TokenizedDocument tokenize_document(const RawDocument& raw);

// Drops stoplist tokens; sentences emptied entirely are dropped.
TokenizedDocument remove_stopwords(const TokenizedDocument& doc,
                                   const WordSet& stoplist);

// Throws EmptyDocument on zero words.
TextStatistics compute_statistics(const TokenizedDocument& doc,
                                  const WordSet& complex_list,
                                  const WordSet& familiar_list);

}  // namespace readability

#endif  // READABILITY_TEXT_CORE_HPP
