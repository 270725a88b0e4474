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

#include "readability/pos.hpp"

#include <algorithm>
#include <sstream>

#include "readability/binio.hpp"
#include "readability/error.hpp"

namespace readability {

namespace {
constexpr char kTaggerMagic[5] = "POST";
constexpr std::uint8_t kTaggerVersion = 1;
}  // namespace

TagSet TagSet::default_set() {
  return TagSet{{"N", "V", "ADJ", "ADV", "P", "PRO", "CONJ", "NUM", "PUNC",
                 "OTHER"}};
}

bool TagSet::contains(const std::string& tag) const {
  return index_of(tag) >= 0;
}

int TagSet::index_of(const std::string& tag) const {
  const auto it = std::find(tags.begin(), tags.end(), tag);
  if (it == tags.end()) return -1;
  return static_cast<int>(it - tags.begin());
}

std::size_t TaggedDocument::word_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

std::vector<std::pair<std::string, std::string>> default_suffix_rules() {
  // Common Persian affixes, matched longest-listed-first.
  return {
      {"‌ها", "N"},    // plural -ha after ZWNJ
      {"های", "N"},         // -haye
      {"ها", "N"},          // -ha
      {"ترین", "ADJ"},      // superlative -tarin
      {"تر", "ADJ"},        // comparative -tar
      {"انه", "ADV"},       // adverbial -aneh
      {"ند", "V"},          // 3pl verb ending
      {"ید", "V"},          // 2pl verb ending
      {"یم", "V"},          // 1pl verb ending
  };
}

LexiconTagger train_tagger(
    const std::vector<TaggedDocument>& corpus, const TagSet& tagset,
    std::vector<std::pair<std::string, std::string>> suffix_rules,
    std::string default_tag) {
  if (corpus.empty()) throw EmptyCorpus("no tagged documents");
  if (tagset.tags.empty()) throw ConfigError("empty tagset");
  if (!tagset.contains(default_tag))
    throw ConfigError("default tag outside tagset: " + default_tag);
  for (const auto& [suffix, t] : suffix_rules) {
    if (!tagset.contains(t))
      throw ConfigError("suffix rule tag outside tagset: " + t);
  }

  std::map<std::string, std::map<std::string, std::uint64_t>> tally;
  std::size_t total_words = 0;
  for (const auto& doc : corpus) {
    for (const auto& sentence : doc.sentences) {
      for (const auto& [word, t] : sentence) {
        if (!tagset.contains(t))
          throw ConfigError("tag outside tagset: " + t + " (word " + word +
                            ")");
        ++tally[word][t];
        ++total_words;
      }
    }
  }
  if (total_words == 0) throw EmptyCorpus("tagged corpus has no words");

  LexiconTagger tagger;
  tagger.tagset = tagset;
  tagger.suffix_rules = std::move(suffix_rules);
  tagger.default_tag = std::move(default_tag);
  for (const auto& [word, per_tag] : tally) {
    std::uint64_t best_count = 0;
    int best_index = static_cast<int>(tagset.tags.size());
    for (const auto& [t, c] : per_tag) {
      const int idx = tagset.index_of(t);
      // Ties break to the earlier tag in the TagSet ordering.
      if (c > best_count || (c == best_count && idx < best_index)) {
        best_count = c;
        best_index = idx;
      }
    }
    tagger.lexicon.emplace(word, tagset.tags[static_cast<std::size_t>(best_index)]);
  }
  return tagger;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

const std::string& tag_word(const LexiconTagger& tagger,
                            const std::string& word) {
  const auto it = tagger.lexicon.find(word);
  if (it != tagger.lexicon.end()) return it->second;
  for (const auto& [suffix, t] : tagger.suffix_rules) {
    if (ends_with(word, suffix)) return t;
  }
  return tagger.default_tag;
}

}  // namespace

TaggedDocument tag(const LexiconTagger& tagger, const TokenizedDocument& doc) {
  TaggedDocument out;
  out.id = doc.id;
  out.sentences.reserve(doc.sentences.size());
  for (const auto& sentence : doc.sentences) {
    std::vector<std::pair<std::string, std::string>> tagged;
    tagged.reserve(sentence.size());
    for (const auto& word : sentence)
      tagged.emplace_back(word, tag_word(tagger, word));
    out.sentences.push_back(std::move(tagged));
  }
  return out;
}

TokenizedDocument substitute_pos(const TaggedDocument& tagged) {
  TokenizedDocument out;
  out.id = tagged.id;
  for (const auto& sentence : tagged.sentences) {
    std::vector<std::string> symbols;
    symbols.reserve(sentence.size());
    for (const auto& [word, t] : sentence) symbols.push_back(t);
    out.sentences.push_back(std::move(symbols));
  }
  return out;
}

std::vector<double> pos_percentages(const TaggedDocument& tagged,
                                    const TagSet& tagset) {
  const std::size_t total = tagged.word_count();
  if (total == 0) throw EmptyDocument("no words to compute POS percentages");
  std::vector<double> out(tagset.tags.size(), 0.0);
  for (const auto& sentence : tagged.sentences) {
    for (const auto& [word, t] : sentence) {
      const int idx = tagset.index_of(t);
      if (idx < 0) throw ConfigError("tag outside tagset: " + t);
      out[static_cast<std::size_t>(idx)] += 1.0;
    }
  }
  for (double& v : out) v /= static_cast<double>(total);
  return out;
}

std::vector<TaggedDocument> parse_tagged_corpus(std::istream& in,
                                                const TagSet& tagset) {
  std::vector<TaggedDocument> docs;
  TaggedDocument current;
  std::size_t doc_index = 0;
  auto flush = [&] {
    if (!current.sentences.empty()) {
      current.id = "tagged_" + std::to_string(doc_index++);
      docs.push_back(std::move(current));
      current = TaggedDocument{};
    }
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::pair<std::string, std::string>> sentence;
    std::string item;
    while (ls >> item) {
      const auto slash = item.rfind('/');
      if (slash == std::string::npos || slash == 0 ||
          slash + 1 == item.size())
        throw ConfigError("malformed word/TAG at line " +
                          std::to_string(line_no) + ": " + item);
      std::string word = item.substr(0, slash);
      std::string t = item.substr(slash + 1);
      if (!tagset.contains(t))
        throw ConfigError("tag outside tagset at line " +
                          std::to_string(line_no) + ": " + t);
      sentence.emplace_back(std::move(word), std::move(t));
    }
    if (!sentence.empty()) current.sentences.push_back(std::move(sentence));
  }
  flush();
  return docs;
}

void save_tagger(const LexiconTagger& tagger,
                 const std::filesystem::path& path) {
  binio::Writer w;
  w.magic(kTaggerMagic);
  w.u8(kTaggerVersion);
  w.u32(static_cast<std::uint32_t>(tagger.tagset.tags.size()));
  for (const auto& t : tagger.tagset.tags) w.str(t);
  w.str(tagger.default_tag);
  w.u32(static_cast<std::uint32_t>(tagger.suffix_rules.size()));
  for (const auto& [suffix, t] : tagger.suffix_rules) {
    w.str(suffix);
    w.str(t);
  }
  w.u64(tagger.lexicon.size());
  for (const auto& [word, t] : tagger.lexicon) {
    w.str(word);
    w.str(t);
  }
  binio::atomic_write(path, w.buffer());
}

LexiconTagger load_tagger(const std::filesystem::path& path) {
  binio::Reader r(binio::read_file(path));
  r.expect_magic(kTaggerMagic);
  const auto version = r.u8();
  if (version != kTaggerVersion)
    throw VersionMismatch("tagger model version " + std::to_string(version) +
                          ", expected " + std::to_string(kTaggerVersion));
  LexiconTagger tagger;
  const auto n_tags = r.u32();
  for (std::uint32_t i = 0; i < n_tags; ++i)
    tagger.tagset.tags.push_back(r.str());
  tagger.default_tag = r.str();
  const auto n_rules = r.u32();
  for (std::uint32_t i = 0; i < n_rules; ++i) {
    std::string suffix = r.str();
    std::string t = r.str();
    tagger.suffix_rules.emplace_back(std::move(suffix), std::move(t));
  }
  const auto n_words = r.u64();
  for (std::uint64_t i = 0; i < n_words; ++i) {
    std::string word = r.str();
    std::string t = r.str();
    tagger.lexicon.emplace(std::move(word), std::move(t));
  }
  if (!r.at_end()) throw CorruptModel("trailing bytes in tagger file");
  return tagger;
}

}  // namespace readability
