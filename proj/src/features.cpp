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

#include "readability/features.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "readability/binio.hpp"
#include "readability/error.hpp"
#include "readability/unicode.hpp"

namespace readability {

namespace {

struct MeanVar {
  double mean = 0.0;
  double variance = 0.0;
};

MeanVar population_mean_var(const std::vector<double>& xs) {
  MeanVar mv;
  if (xs.empty()) return mv;
  double sum = 0.0;
  for (double x : xs) sum += x;
  mv.mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mv.mean) * (x - mv.mean);
  mv.variance = ss / static_cast<double>(xs.size());
  return mv;
}

std::size_t codepoint_length(const std::string& token) {
  return unicode::decode_utf8(token).size();
}

}  // namespace

FeatureSchema FeatureSchema::standard(const TagSet& tagset) {
  FeatureSchema schema;
  auto add = [&](const std::string& name) { schema.names.push_back(name); };
  add("avg_sentence_len");
  add("var_sentence_len");
  add("avg_word_len");
  add("var_word_len");
  for (int n = 1; n <= 5; ++n) add("word_lm_mean_" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) add("word_lm_var_" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) add("char_lm_mean_" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) add("char_lm_var_" + std::to_string(n));
  add("n_sentences");
  add("n_words");
  add("n_chars");
  add("n_unique_words");
  add("entropy");
  for (int k = 1; k <= 5; ++k) add("max_unigram_mean_" + std::to_string(k));
  for (int k = 1; k <= 5; ++k) add("min_unigram_mean_" + std::to_string(k));
  for (const auto& t : tagset.tags) add("pos_pct_" + t);
  for (int n = 1; n <= 5; ++n) add("pos_lm_mean_" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) add("pos_lm_var_" + std::to_string(n));
  add("reading_easy");
  add("reading_medium");
  add("reading_hard");
  return schema;
}

void LanguageModelSet::validate() const {
  auto check = [](const std::vector<NgramModel>& models, NgramUnit unit,
                  const char* name) {
    if (models.size() != 5)
      throw MissingModel(std::string(name) + " model set has " +
                         std::to_string(models.size()) + " models, need 5");
    for (int n = 1; n <= 5; ++n) {
      if (models[static_cast<std::size_t>(n - 1)].order != n ||
          models[static_cast<std::size_t>(n - 1)].unit != unit)
        throw MissingModel(std::string(name) + " model at slot " +
                           std::to_string(n) + " has wrong unit/order");
    }
  };
  check(word, NgramUnit::word, "word");
  check(character, NgramUnit::character, "char");
  check(pos, NgramUnit::pos, "pos");
}

FeatureVector extract_features(const TokenizedDocument& doc,
                               const LanguageModelSet& lms,
                               const LexiconTagger& tagger,
                               const ReadingAbility& reading,
                               const WordSet& stoplist,
                               const ExtractOptions& opts) {
  lms.validate();
  if (doc.word_count() == 0) throw EmptyDocument("cannot extract features");

  const TaggedDocument tagged = tag(tagger, doc);
  const TokenizedDocument pos_doc = substitute_pos(tagged);

  TokenizedDocument body = doc;
  if (opts.remove_stopwords && !stoplist.empty()) {
    body = remove_stopwords(doc, stoplist);
    if (body.word_count() == 0)
      throw EmptyDocument("document empty after stopword removal");
  }

  std::vector<double> sentence_lengths;
  std::vector<double> word_lengths;
  std::set<std::string> unique;
  for (const auto& sentence : body.sentences) {
    sentence_lengths.push_back(static_cast<double>(sentence.size()));
    for (const auto& tok : sentence) {
      word_lengths.push_back(static_cast<double>(codepoint_length(tok)));
      unique.insert(tok);
    }
  }
  const auto sent_mv = population_mean_var(sentence_lengths);
  const auto word_mv = population_mean_var(word_lengths);
  const double n_words = static_cast<double>(body.word_count());

  FeatureVector out;
  auto& v = out.values;
  v.push_back(sent_mv.mean);
  v.push_back(sent_mv.variance);
  v.push_back(word_mv.mean);
  v.push_back(word_mv.variance);

  std::vector<FrequencyStats> word_stats, char_stats, pos_stats;
  for (int n = 0; n < 5; ++n) {
    word_stats.push_back(doc_frequency_stats(lms.word[n], body));
    char_stats.push_back(doc_frequency_stats(lms.character[n], body));
    pos_stats.push_back(doc_frequency_stats(lms.pos[n], pos_doc));
  }
  for (int n = 0; n < 5; ++n) v.push_back(word_stats[n].mean);
  for (int n = 0; n < 5; ++n) v.push_back(word_stats[n].variance);
  for (int n = 0; n < 5; ++n) v.push_back(char_stats[n].mean);
  for (int n = 0; n < 5; ++n) v.push_back(char_stats[n].variance);

  v.push_back(static_cast<double>(body.sentences.size()));
  v.push_back(n_words);
  v.push_back(static_cast<double>(body.char_count));
  v.push_back(static_cast<double>(unique.size()));
  v.push_back(static_cast<double>(unique.size()) / n_words);

  std::vector<double> max_means, min_means;
  for (int k = 1; k <= 5; ++k) {
    const auto [max_mean, min_mean] =
        extreme_unigram_means(lms.word[0], body, k);
    max_means.push_back(max_mean);
    min_means.push_back(min_mean);
  }
  for (double x : max_means) v.push_back(x);
  for (double x : min_means) v.push_back(x);

  for (double p : pos_percentages(tagged, tagger.tagset)) v.push_back(p);
  for (int n = 0; n < 5; ++n) v.push_back(pos_stats[n].mean);
  for (int n = 0; n < 5; ++n) v.push_back(pos_stats[n].variance);

  v.push_back(reading.easy);
  v.push_back(reading.medium);
  v.push_back(reading.hard);
  return out;
}

Scaler fit_scaler(const std::vector<FeatureVector>& dataset) {
  if (dataset.size() < 2)
    throw InsufficientData("scaler needs at least 2 vectors");
  const std::size_t dim = dataset.front().values.size();
  for (const auto& v : dataset) {
    if (v.values.size() != dim)
      throw SchemaMismatch("inconsistent feature dimensions in dataset");
  }
  Scaler scaler;
  scaler.mean.assign(dim, 0.0);
  scaler.stddev.assign(dim, 0.0);
  const double n = static_cast<double>(dataset.size());
  for (const auto& v : dataset)
    for (std::size_t d = 0; d < dim; ++d) scaler.mean[d] += v.values[d];
  for (std::size_t d = 0; d < dim; ++d) scaler.mean[d] /= n;
  for (const auto& v : dataset) {
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = v.values[d] - scaler.mean[d];
      scaler.stddev[d] += diff * diff;
    }
  }
  for (std::size_t d = 0; d < dim; ++d)
    scaler.stddev[d] = std::sqrt(scaler.stddev[d] / n);
  return scaler;
}

FeatureVector transform(const Scaler& scaler, const FeatureVector& v) {
  if (v.values.size() != scaler.mean.size())
    throw SchemaMismatch("vector dimension " +
                         std::to_string(v.values.size()) +
                         " does not match scaler dimension " +
                         std::to_string(scaler.mean.size()));
  FeatureVector out = v;
  for (std::size_t d = 0; d < out.values.size(); ++d) {
    if (scaler.stddev[d] > 0.0)
      out.values[d] = (out.values[d] - scaler.mean[d]) / scaler.stddev[d];
  }
  return out;
}

void export_tsv(const FeatureSchema& schema,
                const std::vector<FeatureVector>& dataset,
                const std::vector<std::string>& labels,
                const std::filesystem::path& features_path,
                const std::filesystem::path& labels_path) {
  if (!labels.empty() && labels.size() != dataset.size())
    throw SchemaMismatch("label count does not match dataset size");
  std::ostringstream feat;
  for (std::size_t i = 0; i < schema.names.size(); ++i) {
    if (i) feat << '\t';
    feat << schema.names[i];
  }
  feat << '\n';
  feat.precision(17);
  for (const auto& v : dataset) {
    if (v.values.size() != schema.size())
      throw SchemaMismatch("vector does not match schema dimension");
    for (std::size_t d = 0; d < v.values.size(); ++d) {
      if (d) feat << '\t';
      feat << v.values[d];
    }
    feat << '\n';
  }
  binio::atomic_write(features_path, feat.str());

  std::ostringstream lab;
  for (const auto& l : labels) lab << l << '\n';
  binio::atomic_write(labels_path, lab.str());
}

}  // namespace readability
