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

#include "readability/ngram_lm.hpp"

#include <algorithm>

#include "readability/binio.hpp"
#include "readability/error.hpp"
#include "readability/unicode.hpp"

namespace readability {

namespace {

constexpr char kSep = '\x1F';
constexpr char kNgramMagic[5] = "NGLM";
constexpr std::uint8_t kNgramVersion = 1;

std::size_t key_unit_count(const std::string& key) {
  return 1 + static_cast<std::size_t>(
                 std::count(key.begin(), key.end(), kSep));
}

void append_windows(const std::vector<std::string>& units, int order,
                    std::vector<std::string>& out) {
  if (units.size() < static_cast<std::size_t>(order)) return;
  for (std::size_t i = 0; i + order <= units.size(); ++i) {
    std::string key = units[i];
    for (int j = 1; j < order; ++j) {
      key += kSep;
      key += units[i + j];
    }
    out.push_back(std::move(key));
  }
}

std::vector<std::string> token_codepoints(const std::string& token) {
  std::vector<std::string> cps;
  for (char32_t c : unicode::decode_utf8(token)) {
    std::string s;
    unicode::append_utf8(s, c);
    cps.push_back(std::move(s));
  }
  return cps;
}

}  // namespace

std::string to_string(NgramUnit unit) {
  switch (unit) {
    case NgramUnit::word:
      return "word";
    case NgramUnit::character:
      return "char";
    case NgramUnit::pos:
      return "pos";
  }
  return "word";
}

NgramUnit ngram_unit_from_string(const std::string& s) {
  if (s == "word") return NgramUnit::word;
  if (s == "char") return NgramUnit::character;
  if (s == "pos") return NgramUnit::pos;
  throw ConfigError("unknown n-gram unit: " + s);
}

std::string join_ngram(std::span<const std::string> units) {
  std::string key;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i) key += kSep;
    key += units[i];
  }
  return key;
}

double NgramModel::frequency(std::span<const std::string> key) const {
  if (key.size() != static_cast<std::size_t>(order))
    throw OrderMismatch("key has " + std::to_string(key.size()) +
                        " units, model order is " + std::to_string(order));
  return frequency_joined(join_ngram(key));
}

double NgramModel::frequency_joined(const std::string& joined_key) const {
  if (key_unit_count(joined_key) != static_cast<std::size_t>(order))
    throw OrderMismatch("joined key does not match model order " +
                        std::to_string(order));
  const auto it = counts.find(joined_key);
  if (it == counts.end() || total == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

std::vector<std::string> enumerate_ngrams(const TokenizedDocument& doc,
                                          NgramUnit unit, int order) {
  std::vector<std::string> grams;
  if (unit == NgramUnit::character) {
    for (const auto& sentence : doc.sentences)
      for (const auto& token : sentence)
        append_windows(token_codepoints(token), order, grams);
  } else {
    for (const auto& sentence : doc.sentences)
      append_windows(sentence, order, grams);
  }
  return grams;
}

NgramModel train_ngram(const std::vector<TokenizedDocument>& corpus,
                       NgramUnit unit, int order) {
  if (order < 1 || order > 5)
    throw ConfigError("n-gram order must be in [1,5], got " +
                      std::to_string(order));
  if (corpus.empty()) throw EmptyCorpus("no documents to train on");
  NgramModel model;
  model.unit = unit;
  model.order = order;
  for (const auto& doc : corpus) {
    for (auto& key : enumerate_ngrams(doc, unit, order)) {
      ++model.counts[std::move(key)];
      ++model.total;
    }
  }
  if (model.total == 0)
    throw EmptyCorpus("corpus contains no n-grams of order " +
                      std::to_string(order));
  return model;
}

FrequencyStats doc_frequency_stats(const NgramModel& model,
                                   const TokenizedDocument& doc) {
  FrequencyStats stats;
  const auto grams = enumerate_ngrams(doc, model.unit, model.order);
  stats.n_evaluated = grams.size();
  if (grams.empty()) return stats;
  double sum = 0.0, sumsq = 0.0;
  for (const auto& g : grams) {
    const double f = model.frequency_joined(g);
    sum += f;
    sumsq += f * f;
  }
  const double n = static_cast<double>(grams.size());
  stats.mean = sum / n;
  stats.variance = std::max(0.0, sumsq / n - stats.mean * stats.mean);
  return stats;
}

std::pair<double, double> extreme_unigram_means(const NgramModel& model,
                                                const TokenizedDocument& doc,
                                                int k) {
  if (model.order != 1)
    throw OrderMismatch("extreme_unigram_means requires a unigram model");
  if (k < 1) throw ConfigError("k must be >= 1");
  if (doc.word_count() == 0) throw EmptyDocument("document has no tokens");

  std::map<std::string, double> freq_by_token;
  for (const auto& sentence : doc.sentences)
    for (const auto& token : sentence)
      freq_by_token.emplace(token, model.frequency_joined(token));

  std::vector<std::pair<double, std::string>> entries;
  entries.reserve(freq_by_token.size());
  for (const auto& [tok, f] : freq_by_token) entries.emplace_back(f, tok);
  std::sort(entries.begin(), entries.end());

  const std::size_t take =
      std::min<std::size_t>(static_cast<std::size_t>(k), entries.size());
  double min_sum = 0.0, max_sum = 0.0;
  for (std::size_t i = 0; i < take; ++i) {
    min_sum += entries[i].first;
    max_sum += entries[entries.size() - 1 - i].first;
  }
  return {max_sum / static_cast<double>(take),
          min_sum / static_cast<double>(take)};
}

void save_ngram(const NgramModel& model, const std::filesystem::path& path) {
  binio::Writer w;
  w.magic(kNgramMagic);
  w.u8(kNgramVersion);
  w.u8(static_cast<std::uint8_t>(model.unit));
  w.u8(static_cast<std::uint8_t>(model.order));
  w.u64(model.total);
  w.u64(model.counts.size());
  // std::map iteration is already sorted, making the file canonical.
  for (const auto& [key, count] : model.counts) {
    w.str(key);
    w.u64(count);
  }
  binio::atomic_write(path, w.buffer());
}

NgramModel load_ngram(const std::filesystem::path& path) {
  binio::Reader r(binio::read_file(path));
  r.expect_magic(kNgramMagic);
  const auto version = r.u8();
  if (version != kNgramVersion)
    throw VersionMismatch("n-gram model version " + std::to_string(version) +
                          ", expected " + std::to_string(kNgramVersion));
  NgramModel model;
  model.unit = static_cast<NgramUnit>(r.u8());
  model.order = r.u8();
  model.total = r.u64();
  const std::uint64_t n = r.u64();
  std::uint64_t check_total = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::string key = r.str();
    const std::uint64_t count = r.u64();
    check_total += count;
    model.counts.emplace(std::move(key), count);
  }
  if (!r.at_end() || check_total != model.total)
    throw CorruptModel("inconsistent n-gram model file: " + path.string());
  return model;
}

}  // namespace readability
