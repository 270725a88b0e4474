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

#include "readability/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "readability/error.hpp"
#include "readability/rng.hpp"

namespace readability {

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t t = 0;
  for (const auto& row : m)
    for (const std::uint64_t v : row) t += v;
  return t;
}

std::uint64_t ConfusionMatrix::support(int c) const {
  std::uint64_t t = 0;
  for (const std::uint64_t v : m[static_cast<std::size_t>(c)]) t += v;
  return t;
}

double precision(const ConfusionMatrix& cm, int c) {
  const auto cc = static_cast<std::size_t>(c);
  std::uint64_t tp = cm.m[cc][cc];
  std::uint64_t predicted = 0;
  for (int t = 0; t < cm.n_classes; ++t)
    predicted += cm.m[static_cast<std::size_t>(t)][cc];
  if (predicted == 0) return 0.0;
  return static_cast<double>(tp) / static_cast<double>(predicted);
}

double recall(const ConfusionMatrix& cm, int c) {
  const auto cc = static_cast<std::size_t>(c);
  const std::uint64_t tp = cm.m[cc][cc];
  const std::uint64_t actual = cm.support(c);
  if (actual == 0) return 0.0;
  return static_cast<double>(tp) / static_cast<double>(actual);
}

double f1_score(const ConfusionMatrix& cm, int c) {
  const double p = precision(cm, c);
  const double r = recall(cm, c);
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

ClassReport class_report(const ConfusionMatrix& cm) {
  ClassReport report;
  for (int c = 0; c < cm.n_classes; ++c) {
    report.precision.push_back(precision(cm, c));
    report.recall.push_back(recall(cm, c));
    report.f1.push_back(f1_score(cm, c));
    report.support.push_back(cm.support(c));
  }
  return report;
}

WeightedMetrics weighted_metrics(const ClassReport& report) {
  std::uint64_t total = 0;
  for (const std::uint64_t s : report.support) total += s;
  if (total == 0) throw ZeroSupport("no examples in any class");
  WeightedMetrics wm;
  for (std::size_t c = 0; c < report.support.size(); ++c) {
    const double w =
        static_cast<double>(report.support[c]) / static_cast<double>(total);
    wm.precision += w * report.precision[c];
    wm.recall += w * report.recall[c];
    wm.f1 += w * report.f1[c];
  }
  return wm;
}

double roc_auc_ovr(const std::vector<std::vector<double>>& scores,
                   const std::vector<int>& labels, int n_classes,
                   std::vector<int>* skipped) {
  if (scores.size() != labels.size() || scores.empty())
    throw InsufficientData("scores/labels mismatch in AUC computation");
  double sum = 0.0;
  int used = 0;
  for (int c = 0; c < n_classes; ++c) {
    std::size_t n_pos = 0;
    for (int l : labels)
      if (l == c) ++n_pos;
    const std::size_t n_neg = labels.size() - n_pos;
    if (n_pos == 0 || n_neg == 0) {
      if (skipped) skipped->push_back(c);
      continue;
    }
    std::vector<std::size_t> order(labels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return scores[a][static_cast<std::size_t>(c)] <
             scores[b][static_cast<std::size_t>(c)];
    });
    // Midrank assignment over tied scores.
    double pos_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t j = i;
      while (j + 1 < order.size() &&
             scores[order[j + 1]][static_cast<std::size_t>(c)] ==
                 scores[order[i]][static_cast<std::size_t>(c)])
        ++j;
      const double midrank =
          (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
      for (std::size_t t = i; t <= j; ++t) {
        if (labels[order[t]] == c) pos_rank_sum += midrank;
      }
      i = j + 1;
    }
    const double np = static_cast<double>(n_pos);
    const double nn = static_cast<double>(n_neg);
    sum += (pos_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
    ++used;
  }
  if (used == 0) return 0.0;
  return sum / static_cast<double>(used);
}

std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
kfold_split(const std::vector<int>& labels, int k, std::uint64_t seed,
            bool stratified) {
  if (k < 2) throw ConfigError("k must be >= 2");
  if (labels.size() < static_cast<std::size_t>(k))
    throw TooFewExamples("dataset smaller than k = " + std::to_string(k));

  std::vector<std::vector<std::size_t>> folds(static_cast<std::size_t>(k));
  std::size_t fold_ptr = 0;
  auto deal = [&](std::vector<std::size_t>& group, std::uint64_t sub_seed) {
    Rng rng(sub_seed);
    rng.shuffle(group);
    for (const std::size_t idx : group) {
      folds[fold_ptr].push_back(idx);
      fold_ptr = (fold_ptr + 1) % static_cast<std::size_t>(k);
    }
  };

  if (stratified) {
    std::map<int, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i)
      by_label[labels[i]].push_back(i);
    for (auto& [label, group] : by_label)
      deal(group, Rng::derive(seed, static_cast<std::uint64_t>(label) + 101));
  } else {
    std::vector<std::size_t> all(labels.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    deal(all, Rng::derive(seed, 7));
  }

  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      splits;
  for (int f = 0; f < k; ++f) {
    std::vector<std::size_t> test = folds[static_cast<std::size_t>(f)];
    std::sort(test.begin(), test.end());
    std::vector<std::size_t> train;
    for (int g = 0; g < k; ++g) {
      if (g == f) continue;
      const auto& fold = folds[static_cast<std::size_t>(g)];
      train.insert(train.end(), fold.begin(), fold.end());
    }
    std::sort(train.begin(), train.end());
    splits.emplace_back(std::move(train), std::move(test));
  }
  return splits;
}

namespace {

struct TrainedFoldModel {
  std::variant<GnbModel, LinearSvmModel, TreeModel, ForestModel> model;

  Prediction predict(const std::vector<double>& v) const {
    return std::visit(
        [&](const auto& m) -> Prediction {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, GnbModel>) return predict_gnb(m, v);
          else if constexpr (std::is_same_v<T, LinearSvmModel>)
            return predict_linear(m, v);
          else if constexpr (std::is_same_v<T, TreeModel>)
            return predict_tree(m, v);
          else
            return predict_forest(m, v);
        },
        model);
  }
};

TrainedFoldModel train_with_config(const ClassifierConfig& cfg,
                                   const Matrix& x,
                                   const std::vector<int>& y) {
  TrainedFoldModel out;
  switch (cfg.kind) {
    case ClassifierKind::gnb:
      out.model = train_gnb(x, y, kNumClasses, cfg.gnb_var_floor);
      break;
    case ClassifierKind::linear_svm:
      out.model = train_linear_svm(x, y, kNumClasses, cfg.svm_lambda,
                                   cfg.svm_epochs, cfg.seed);
      break;
    case ClassifierKind::tree:
      out.model = train_tree(x, y, kNumClasses,
                             TreeConfig{cfg.tree_max_depth, cfg.tree_min_leaf});
      break;
    case ClassifierKind::forest:
      out.model = train_forest(x, y, kNumClasses, cfg.forest_estimators,
                               cfg.seed,
                               TreeConfig{cfg.tree_max_depth, cfg.tree_min_leaf});
      break;
  }
  return out;
}

void evaluate_split(const TrainedFoldModel& model, const Matrix& x,
                    const std::vector<int>& y, ConfusionMatrix& cm,
                    ClassReport& report, WeightedMetrics& weighted,
                    double& auc) {
  std::vector<std::vector<double>> scores;
  scores.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto p = model.predict(x[i]);
    cm.add(y[i], p.label);
    scores.push_back(p.scores);
  }
  report = class_report(cm);
  weighted = weighted_metrics(report);
  auc = roc_auc_ovr(scores, y, cm.n_classes);
}

}  // namespace

EvalReport cross_validate(const ClassifierConfig& config,
                          const std::vector<FeatureVector>& features,
                          const std::vector<int>& labels, int k,
                          std::uint64_t seed) {
  if (features.size() != labels.size())
    throw InsufficientData("features/labels size mismatch");
  EvalReport report;
  report.classifier = to_string(config.kind);
  report.k = k;
  report.seed = seed;

  const auto splits = kfold_split(labels, k, seed, /*stratified=*/true);
  for (const auto& [train_idx, test_idx] : splits) {
    std::vector<FeatureVector> train_raw;
    std::vector<int> train_y, test_y;
    for (const std::size_t i : train_idx) {
      train_raw.push_back(features[i]);
      train_y.push_back(labels[i]);
    }
    // The scaler only ever sees the train split.
    const Scaler scaler = fit_scaler(train_raw);
    Matrix train_x, test_x;
    for (const auto& v : train_raw)
      train_x.push_back(transform(scaler, v).values);
    for (const std::size_t i : test_idx) {
      test_x.push_back(transform(scaler, features[i]).values);
      test_y.push_back(labels[i]);
    }

    ClassifierConfig fold_cfg = config;
    const auto model = train_with_config(fold_cfg, train_x, train_y);

    FoldResult fold;
    evaluate_split(model, train_x, train_y, fold.train_cm, fold.train_report,
                   fold.train_weighted, fold.train_auc);
    evaluate_split(model, test_x, test_y, fold.test_cm, fold.test_report,
                   fold.test_weighted, fold.test_auc);
    report.folds.push_back(std::move(fold));
  }

  const double n = static_cast<double>(report.folds.size());
  for (const auto& fold : report.folds) {
    report.train_weighted.precision += fold.train_weighted.precision / n;
    report.train_weighted.recall += fold.train_weighted.recall / n;
    report.train_weighted.f1 += fold.train_weighted.f1 / n;
    report.test_weighted.precision += fold.test_weighted.precision / n;
    report.test_weighted.recall += fold.test_weighted.recall / n;
    report.test_weighted.f1 += fold.test_weighted.f1 / n;
    report.train_auc += fold.train_auc / n;
    report.test_auc += fold.test_auc / n;
  }
  return report;
}

namespace {

nlohmann::json cm_to_json(const ConfusionMatrix& cm) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : cm.m) rows.push_back(row);
  return rows;
}

nlohmann::json report_to_json_obj(const ClassReport& cr) {
  nlohmann::json j;
  j["precision"] = cr.precision;
  j["recall"] = cr.recall;
  j["f1"] = cr.f1;
  j["support"] = cr.support;
  return j;
}

}  // namespace

std::string report_to_json(const EvalReport& report) {
  nlohmann::json j;
  j["classifier"] = report.classifier;
  j["k"] = report.k;
  j["seed"] = report.seed;
  j["aggregation"] = "unweighted mean over folds";
  j["zero_division_convention"] = "0/0 -> 0";
  j["weighted"] = {
      {"train",
       {{"precision", report.train_weighted.precision},
        {"recall", report.train_weighted.recall},
        {"f1", report.train_weighted.f1},
        {"roc_auc", report.train_auc}}},
      {"test",
       {{"precision", report.test_weighted.precision},
        {"recall", report.test_weighted.recall},
        {"f1", report.test_weighted.f1},
        {"roc_auc", report.test_auc}}}};
  nlohmann::json folds = nlohmann::json::array();
  for (const auto& fold : report.folds) {
    nlohmann::json fj;
    fj["train_confusion"] = cm_to_json(fold.train_cm);
    fj["test_confusion"] = cm_to_json(fold.test_cm);
    fj["train_report"] = report_to_json_obj(fold.train_report);
    fj["test_report"] = report_to_json_obj(fold.test_report);
    fj["train_weighted"] = {{"precision", fold.train_weighted.precision},
                            {"recall", fold.train_weighted.recall},
                            {"f1", fold.train_weighted.f1}};
    fj["test_weighted"] = {{"precision", fold.test_weighted.precision},
                           {"recall", fold.test_weighted.recall},
                           {"f1", fold.test_weighted.f1}};
    fj["train_roc_auc"] = fold.train_auc;
    fj["test_roc_auc"] = fold.test_auc;
    folds.push_back(std::move(fj));
  }
  j["folds"] = std::move(folds);
  return j.dump(2) + "\n";
}

std::string render_report_table(const EvalReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "Classifier: " << report.classifier << " (" << report.k
      << "-fold, seed " << report.seed << ")\n";
  out << "            Precision (train/test)  Recall (train/test)  "
         "F1 (train/test)  ROC_AUC (train/test)\n";
  out << "overall     " << report.train_weighted.precision << "/"
      << report.test_weighted.precision << "               "
      << report.train_weighted.recall << "/" << report.test_weighted.recall
      << "            " << report.train_weighted.f1 << "/"
      << report.test_weighted.f1 << "        " << report.train_auc << "/"
      << report.test_auc << "\n";

  // Per-class rows, fold-averaged.
  const double n = static_cast<double>(report.folds.size());
  for (int c = 0; c < kNumClasses; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    double ptr = 0, pte = 0, rtr = 0, rte = 0, ftr = 0, fte = 0;
    for (const auto& fold : report.folds) {
      ptr += fold.train_report.precision[cc] / n;
      pte += fold.test_report.precision[cc] / n;
      rtr += fold.train_report.recall[cc] / n;
      rte += fold.test_report.recall[cc] / n;
      ftr += fold.train_report.f1[cc] / n;
      fte += fold.test_report.f1[cc] / n;
    }
    out << std::left << std::setw(12) << label_to_string(c) << std::right
        << ptr << "/" << pte << "               " << rtr << "/" << rte
        << "            " << ftr << "/" << fte << "\n";
  }
  out << "(metrics: 0/0 -> 0; folds aggregated by unweighted mean)\n";
  return out.str();
}

}  // namespace readability
