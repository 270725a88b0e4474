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

#ifndef READABILITY_POS_HPP
#define READABILITY_POS_HPP

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "readability/text_core.hpp"

namespace readability {

struct TagSet {
  std::vector<std::string> tags;

  static TagSet default_set();
  bool contains(const std::string& tag) const;
  // Position in the fixed ordering; -1 when absent.
  int index_of(const std::string& tag) const;
};

struct TaggedDocument {
  std::string id;
  std::vector<std::vector<std::pair<std::string, std::string>>> sentences;

  std::size_t word_count() const;
};

// Deterministic lexicon + suffix-rule tagger. Lexicon maps each word to its
// majority tag from the training corpus; unknown words fall through the
// suffix rules in order, then to default_tag.
struct LexiconTagger {
  TagSet tagset;
  std::map<std::string, std::string> lexicon;
  std::vector<std::pair<std::string, std::string>> suffix_rules;
  std::string default_tag = "N";
};

std::vector<std::pair<std::string, std::string>> default_suffix_rules();

LexiconTagger train_tagger(
    const std::vector<TaggedDocument>& corpus, const TagSet& tagset,
    std::vector<std::pair<std::string, std::string>> suffix_rules,
    std::string default_tag);

TaggedDocument tag(const LexiconTagger& tagger, const TokenizedDocument& doc);

// Replaces each token with its tag symbol; the result trains pos-unit n-gram
// models.
TokenizedDocument substitute_pos(const TaggedDocument& tagged);

// Per-tag fraction of words, in TagSet order; sums to 1. Throws
// EmptyDocument on zero words.
std::vector<double> pos_percentages(const TaggedDocument& tagged,
                                    const TagSet& tagset);

// Pre-tagged corpus: one sentence per line, tokens as word/TAG. Blank lines
// separate documents; lines starting with # are comments.
std::vector<TaggedDocument> parse_tagged_corpus(std::istream& in,
                                                const TagSet& tagset);

void save_tagger(const LexiconTagger& tagger,
                 const std::filesystem::path& path);
LexiconTagger load_tagger(const std::filesystem::path& path);

}  // namespace readability

#endif  // READABILITY_POS_HPP
