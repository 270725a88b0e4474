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

#ifndef READABILITY_CLASSIFY_HPP
#define READABILITY_CLASSIFY_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "readability/features.hpp"

namespace readability {

enum class Label : int { easy = 0, medium = 1, hard = 2 };
constexpr int kNumClasses = 3;

int label_from_string(const std::string& s);
std::string label_to_string(int label);

using Matrix = std::vector<std::vector<double>>;

struct Prediction {
  int label = 0;
  std::vector<double> scores;  // one per class, argmax = label
};

// --- Gaussian naive Bayes ---

struct GnbModel {
  int n_classes = kNumClasses;
  std::vector<double> priors;
  std::vector<std::vector<double>> means;      // [class][dim]
  std::vector<std::vector<double>> variances;  // floored at var_floor
};

GnbModel train_gnb(const Matrix& x, const std::vector<int>& y,
                   int n_classes = kNumClasses, double var_floor = 1e-9);
// Scores are per-class log posteriors (up to the shared evidence term).
Prediction predict_gnb(const GnbModel& model, const std::vector<double>& v);

// --- One-vs-rest linear SVM (Pegasos-style subgradient descent) ---

struct LinearSvmModel {
  int n_classes = kNumClasses;
  std::vector<std::vector<double>> weights;  // [class][dim]
  std::vector<double> bias;                  // [class]
  double lambda = 1e-4;
  int epochs = 100;
  std::uint64_t seed = 0;
};

LinearSvmModel train_linear_svm(const Matrix& x, const std::vector<int>& y,
                                int n_classes = kNumClasses,
                                double lambda = 1e-4, int epochs = 100,
                                std::uint64_t seed = 0);
Prediction predict_linear(const LinearSvmModel& model,
                          const std::vector<double>& v);

// --- CART decision tree (Gini impurity, midpoint thresholds) ---

struct TreeNode {
  bool leaf = true;
  int dim = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::vector<std::uint64_t> counts;  // per-class training counts at leaves
};

struct TreeModel {
  int n_classes = kNumClasses;
  std::vector<TreeNode> nodes;  // node 0 is the root
};

struct TreeConfig {
  int max_depth = -1;  // unrestricted by default
  std::size_t min_leaf = 1;
};

TreeModel train_tree(const Matrix& x, const std::vector<int>& y,
                     int n_classes = kNumClasses, const TreeConfig& cfg = {});
// Scores are the leaf's class-count fractions.
Prediction predict_tree(const TreeModel& model, const std::vector<double>& v);

// --- Random forest (bootstrap + sqrt(D) feature subsampling) ---

struct ForestModel {
  int n_classes = kNumClasses;
  std::vector<TreeModel> trees;
  std::uint64_t seed = 0;
};

ForestModel train_forest(const Matrix& x, const std::vector<int>& y,
                         int n_classes = kNumClasses, int n_estimators = 50,
                         std::uint64_t seed = 0, const TreeConfig& cfg = {});
// Scores are vote fractions; ties break to the lowest class index.
Prediction predict_forest(const ForestModel& model,
                          const std::vector<double>& v);

// --- Self-contained model file: schema + scaler + classifier ---

enum class ClassifierKind : std::uint8_t {
  gnb = 0,
  linear_svm = 1,
  tree = 2,
  forest = 3
};

ClassifierKind classifier_kind_from_string(const std::string& s);
std::string to_string(ClassifierKind kind);

struct ClassifierModel {
  FeatureSchema schema;
  Scaler scaler;
  std::variant<GnbModel, LinearSvmModel, TreeModel, ForestModel> model;

  ClassifierKind kind() const {
    return static_cast<ClassifierKind>(model.index());
  }
};

// Applies the embedded scaler, then dispatches on the classifier kind.
Prediction predict(const ClassifierModel& model, const FeatureVector& raw);

void save_model(const ClassifierModel& model,
                const std::filesystem::path& path);
ClassifierModel load_model(const std::filesystem::path& path);

}  // namespace readability

#endif  // READABILITY_CLASSIFY_HPP
