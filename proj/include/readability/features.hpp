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

#ifndef READABILITY_FEATURES_HPP
#define READABILITY_FEATURES_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "readability/ngram_lm.hpp"
#include "readability/pos.hpp"
#include "readability/text_core.hpp"

namespace readability {

// Fraction of easy/medium/hard labels; components sum to 1.
struct ReadingAbility {
  double easy = 0.0;
  double medium = 0.0;
  double hard = 0.0;

  // Dataset-wide label portions, used when the reader is unknown.
  static ReadingAbility population_prior() { return {0.54, 0.32, 0.14}; }
};

struct FeatureSchema {
  std::vector<std::string> names;

  static FeatureSchema standard(const TagSet& tagset);
  std::size_t size() const { return names.size(); }
  bool operator==(const FeatureSchema&) const = default;
};

struct FeatureVector {
  std::vector<double> values;
};

// Orders 1..5 for each unit; index i holds the order-(i+1) model.
struct LanguageModelSet {
  std::vector<NgramModel> word;
  std::vector<NgramModel> character;
  std::vector<NgramModel> pos;

  // Throws MissingModel unless each unit has models of orders 1..5.
  void validate() const;
};

struct ExtractOptions {
  // POS features always come from the full text; everything else uses the
  // stopword-filtered text when enabled.
  bool remove_stopwords = true;
};

FeatureVector extract_features(const TokenizedDocument& doc,
                               const LanguageModelSet& lms,
                               const LexiconTagger& tagger,
                               const ReadingAbility& reading,
                               const WordSet& stoplist,
                               const ExtractOptions& opts = {});

// Per-dimension population mean/std; std = 0 dimensions pass through
// unscaled.
struct Scaler {
  std::vector<double> mean;
  std::vector<double> stddev;
};

Scaler fit_scaler(const std::vector<FeatureVector>& dataset);
FeatureVector transform(const Scaler& scaler, const FeatureVector& v);

// Projector-compatible TSV: header row of schema names, one vector per row.
// Companion label file holds one label per row.
void export_tsv(const FeatureSchema& schema,
                const std::vector<FeatureVector>& dataset,
                const std::vector<std::string>& labels,
                const std::filesystem::path& features_path,
                const std::filesystem::path& labels_path);

}  // namespace readability

#endif  // READABILITY_FEATURES_HPP
