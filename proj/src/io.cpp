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

#include "readability/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "readability/binio.hpp"
#include "readability/classify.hpp"
#include "readability/error.hpp"

namespace readability {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<RawDocument> load_corpus(const std::filesystem::path& path) {
  std::vector<RawDocument> docs;
  if (std::filesystem::is_directory(path)) {
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".txt")
        continue;
      docs.push_back(RawDocument{entry.path().stem().string(),
                                 binio::read_file(entry.path())});
    }
  } else {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus: " + path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (trim(line).empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("id") || !j.contains("text"))
        throw IoError("corpus JSONL: malformed line " +
                      std::to_string(line_no) + " in " + path.string());
      docs.push_back(RawDocument{j["id"].get<std::string>(),
                                 j["text"].get<std::string>()});
    }
  }
  std::sort(docs.begin(), docs.end(),
            [](const RawDocument& a, const RawDocument& b) {
              return a.id < b.id;
            });
  for (std::size_t i = 1; i < docs.size(); ++i) {
    if (docs[i].id == docs[i - 1].id)
      throw IoError("duplicate document id in corpus: " + docs[i].id);
  }
  return docs;
}

WordSet load_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open word list: " + path.string());
  WordSet words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string word = trim(line);
    if (word.empty() || word[0] == '#') continue;
    words.insert(word);
  }
  return words;
}

std::vector<DatasetRow> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset: " + path.string());
  std::vector<DatasetRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("text_id") || !j.contains("text") ||
        !j.contains("label"))
      throw IoError("dataset JSONL: malformed line " +
                    std::to_string(line_no) + " in " + path.string());
    DatasetRow row;
    row.text_id = j["text_id"].get<std::string>();
    row.text = j["text"].get<std::string>();
    row.label = label_from_string(j["label"].get<std::string>());
    if (j.contains("agreement")) row.agreement = j["agreement"].get<int>();
    if (j.contains("reading_ability") && j["reading_ability"].is_array() &&
        j["reading_ability"].size() == 3) {
      row.reading.easy = j["reading_ability"][0].get<double>();
      row.reading.medium = j["reading_ability"][1].get<double>();
      row.reading.hard = j["reading_ability"][2].get<double>();
    } else {
      row.reading = ReadingAbility::population_prior();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void save_feature_table(const FeatureTable& table,
                        const std::filesystem::path& path) {
  std::ostringstream out;
  out.precision(17);
  out << "id\tlabel";
  for (const auto& name : table.schema.names) out << '\t' << name;
  out << '\n';
  for (std::size_t i = 0; i < table.features.size(); ++i) {
    out << table.ids[i] << '\t' << label_to_string(table.labels[i]);
    for (const double v : table.features[i].values) out << '\t' << v;
    out << '\n';
  }
  binio::atomic_write(path, out.str());
}

FeatureTable load_feature_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open feature table: " + path.string());
  FeatureTable table;
  std::string line;
  if (!std::getline(in, line))
    throw IoError("empty feature table: " + path.string());
  {
    std::istringstream hs(line);
    std::string col;
    std::vector<std::string> cols;
    while (std::getline(hs, col, '\t')) cols.push_back(col);
    if (cols.size() < 3 || cols[0] != "id" || cols[1] != "label")
      throw IoError("feature table header must start with id\\tlabel");
    table.schema.names.assign(cols.begin() + 2, cols.end());
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    if (!std::getline(ls, cell, '\t'))
      throw IoError("bad feature row at line " + std::to_string(line_no));
    table.ids.push_back(cell);
    if (!std::getline(ls, cell, '\t'))
      throw IoError("bad feature row at line " + std::to_string(line_no));
    table.labels.push_back(label_from_string(cell));
    FeatureVector v;
    while (std::getline(ls, cell, '\t')) v.values.push_back(std::stod(cell));
    if (v.values.size() != table.schema.size())
      throw IoError("feature row at line " + std::to_string(line_no) +
                    " has " + std::to_string(v.values.size()) +
                    " values, expected " + std::to_string(table.schema.size()));
    table.features.push_back(std::move(v));
  }
  return table;
}

std::map<std::string, std::string> load_config(
    const std::filesystem::path& path,
    const std::vector<std::string>& allowed_keys) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path.string());
  std::map<std::string, std::string> config;
  std::vector<std::string> problems;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      problems.push_back("line " + std::to_string(line_no) +
                         ": expected key = value");
      continue;
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      problems.push_back("line " + std::to_string(line_no) + ": empty key");
      continue;
    }
    if (!allowed_keys.empty() &&
        std::find(allowed_keys.begin(), allowed_keys.end(), key) ==
            allowed_keys.end()) {
      problems.push_back("line " + std::to_string(line_no) +
                         ": unknown key '" + key + "'");
      continue;
    }
    config[key] = value;
  }
  if (!problems.empty()) {
    std::string msg = "config errors in " + path.string() + ":";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ConfigError(msg);
  }
  return config;
}

}  // namespace readability
