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

#ifndef READABILITY_EVAL_HPP
#define READABILITY_EVAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "readability/classify.hpp"

namespace readability {

struct ConfusionMatrix {
  int n_classes = kNumClasses;
  std::vector<std::vector<std::uint64_t>> m;  // [true][predicted]

  explicit ConfusionMatrix(int n = kNumClasses)
      : n_classes(n),
        m(static_cast<std::size_t>(n),
          std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)) {}

  void add(int true_class, int predicted) {
    ++m[static_cast<std::size_t>(true_class)]
       [static_cast<std::size_t>(predicted)];
  }
  std::uint64_t total() const;
  std::uint64_t support(int c) const;  // row sum
};

// Eqs. for precision/recall/F1 with the 0/0 -> 0 convention.
double precision(const ConfusionMatrix& cm, int c);
double recall(const ConfusionMatrix& cm, int c);
double f1_score(const ConfusionMatrix& cm, int c);

struct ClassReport {
  std::vector<double> precision;
  std::vector<double> recall;
  std::vector<double> f1;
  std::vector<std::uint64_t> support;
};

ClassReport class_report(const ConfusionMatrix& cm);

struct WeightedMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Support-weighted means; zero-support classes are excluded. Throws
// ZeroSupport when every class is empty.
WeightedMetrics weighted_metrics(const ClassReport& report);

// Macro one-vs-rest AUC via the rank statistic with midrank ties. Classes
// absent from labels (or covering all of them) are skipped; skipped class
// indices are returned through skipped when non-null.
double roc_auc_ovr(const std::vector<std::vector<double>>& scores,
                   const std::vector<int>& labels, int n_classes = kNumClasses,
                   std::vector<int>* skipped = nullptr);

// Stratified folds: disjoint, exhaustive, sizes within 1, deterministic
// under seed. Throws TooFewExamples when the dataset is smaller than k.
std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
kfold_split(const std::vector<int>& labels, int k, std::uint64_t seed,
            bool stratified = true);

struct ClassifierConfig {
  ClassifierKind kind = ClassifierKind::linear_svm;
  double svm_lambda = 1e-4;
  int svm_epochs = 100;
  double gnb_var_floor = 1e-9;
  int tree_max_depth = -1;
  std::size_t tree_min_leaf = 1;
  int forest_estimators = 50;
  std::uint64_t seed = 0;
};

struct FoldResult {
  ConfusionMatrix train_cm{kNumClasses};
  ConfusionMatrix test_cm{kNumClasses};
  ClassReport train_report;
  ClassReport test_report;
  WeightedMetrics train_weighted;
  WeightedMetrics test_weighted;
  double train_auc = 0.0;
  double test_auc = 0.0;
};

struct EvalReport {
  std::string classifier;
  int k = 10;
  std::uint64_t seed = 0;
  std::vector<FoldResult> folds;
  // Unweighted means over folds.
  WeightedMetrics train_weighted;
  WeightedMetrics test_weighted;
  double train_auc = 0.0;
  double test_auc = 0.0;
};

// Trains per fold (scaler fitted on the train split only) and aggregates.
EvalReport cross_validate(const ClassifierConfig& config,
                          const std::vector<FeatureVector>& features,
                          const std::vector<int>& labels, int k,
                          std::uint64_t seed);

std::string report_to_json(const EvalReport& report);
std::string render_report_table(const EvalReport& report);

}  // namespace readability

#endif  // READABILITY_EVAL_HPP
