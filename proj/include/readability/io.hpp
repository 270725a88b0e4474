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

#ifndef READABILITY_IO_HPP
#define READABILITY_IO_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "readability/features.hpp"
#include "readability/text_core.hpp"

namespace readability {

// Directory of UTF-8 .txt files (one document each, id = stem) or a single
// JSONL file with fields id/text. Documents sorted by id.
std::vector<RawDocument> load_corpus(const std::filesystem::path& path);

// Newline-delimited UTF-8, one word per line, #-comments ignored.
WordSet load_word_list(const std::filesystem::path& path);

struct DatasetRow {
  std::string text_id;
  std::string text;
  int label = 0;
  int agreement = 0;
  ReadingAbility reading;
};

// Curated dataset JSONL as written by emit_dataset.
std::vector<DatasetRow> load_dataset(const std::filesystem::path& path);

struct FeatureTable {
  FeatureSchema schema;
  std::vector<std::string> ids;
  std::vector<int> labels;
  std::vector<FeatureVector> features;
};

// TSV with columns id, label, then the schema names.
void save_feature_table(const FeatureTable& table,
                        const std::filesystem::path& path);
FeatureTable load_feature_table(const std::filesystem::path& path);

// Flat `key = value` config file; # comments. Throws ConfigError listing
// every unknown key when allowed_keys is non-empty.
std::map<std::string, std::string> load_config(
    const std::filesystem::path& path,
    const std::vector<std::string>& allowed_keys);

}  // namespace readability

#endif  // READABILITY_IO_HPP
