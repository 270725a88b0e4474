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

#ifndef READABILITY_NGRAM_LM_HPP
#define READABILITY_NGRAM_LM_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "readability/text_core.hpp"

namespace readability {

enum class NgramUnit : std::uint8_t { word = 0, character = 1, pos = 2 };

std::string to_string(NgramUnit unit);
NgramUnit ngram_unit_from_string(const std::string& s);

// Frequency table over fixed-order n-grams. Keys are the n units joined by
// a 0x1F separator; counts are exact, no smoothing, no boundary padding.
// Word/POS n-grams never cross sentence boundaries; character n-grams never
// cross token boundaries.
struct NgramModel {
  NgramUnit unit = NgramUnit::word;
  int order = 1;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;

  std::size_t vocab_size() const { return counts.size(); }

  // counts[key]/total; unseen keys are exactly 0. Throws OrderMismatch when
  // the key length differs from the model order.
  double frequency(std::span<const std::string> key) const;
  double frequency_joined(const std::string& joined_key) const;
};

struct FrequencyStats {
  double mean = 0.0;
  double variance = 0.0;  // population variance
  std::size_t n_evaluated = 0;
};

std::string join_ngram(std::span<const std::string> units);

// Enumerates the document's n-grams exactly as training does.
std::vector<std::string> enumerate_ngrams(const TokenizedDocument& doc,
                                          NgramUnit unit, int order);

// Throws EmptyCorpus when the corpus holds no n-grams at all.
NgramModel train_ngram(const std::vector<TokenizedDocument>& corpus,
                       NgramUnit unit, int order);

FrequencyStats doc_frequency_stats(const NgramModel& model,
                                   const TokenizedDocument& doc);

// Mean unigram frequency of the k most / least frequent distinct tokens of
// the doc (fewer when the doc has fewer distinct tokens). Unseen tokens
// participate with frequency 0.
std::pair<double, double> extreme_unigram_means(const NgramModel& model,
                                                const TokenizedDocument& doc,
                                                int k);

void save_ngram(const NgramModel& model, const std::filesystem::path& path);
NgramModel load_ngram(const std::filesystem::path& path);

}  // namespace readability

#endif  // READABILITY_NGRAM_LM_HPP
