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

#include "readability/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "readability/binio.hpp"
#include "readability/error.hpp"
#include "readability/rng.hpp"

namespace readability {

namespace {

constexpr char kModelMagic[5] = "RCLF";
constexpr std::uint8_t kModelVersion = 1;

int argmax_lowest(const std::vector<double>& scores) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(scores.size()); ++i) {
    if (scores[static_cast<std::size_t>(i)] >
        scores[static_cast<std::size_t>(best)])
      best = i;
  }
  return best;
}

void check_shape(const Matrix& x, const std::vector<int>& y, int n_classes) {
  if (x.empty() || x.size() != y.size())
    throw InsufficientData("training data empty or x/y size mismatch");
  const std::size_t dim = x.front().size();
  for (const auto& row : x) {
    if (row.size() != dim)
      throw SchemaMismatch("inconsistent feature dimensions");
  }
  for (int label : y) {
    if (label < 0 || label >= n_classes)
      throw SchemaMismatch("label out of range: " + std::to_string(label));
  }
}

}  // namespace

int label_from_string(const std::string& s) {
  if (s == "easy") return 0;
  if (s == "medium") return 1;
  if (s == "hard") return 2;
  throw ConfigError("unknown label: " + s);
}

std::string label_to_string(int label) {
  switch (label) {
    case 0:
      return "easy";
    case 1:
      return "medium";
    case 2:
      return "hard";
    default:
      return "class" + std::to_string(label);
  }
}

// --- GNB ---

GnbModel train_gnb(const Matrix& x, const std::vector<int>& y, int n_classes,
                   double var_floor) {
  check_shape(x, y, n_classes);
  const std::size_t dim = x.front().size();
  std::vector<std::size_t> class_count(static_cast<std::size_t>(n_classes), 0);
  for (int label : y) ++class_count[static_cast<std::size_t>(label)];
  for (int c = 0; c < n_classes; ++c) {
    if (class_count[static_cast<std::size_t>(c)] == 0)
      throw MissingClass("no examples for class " + label_to_string(c));
  }

  GnbModel model;
  model.n_classes = n_classes;
  model.priors.assign(static_cast<std::size_t>(n_classes), 0.0);
  model.means.assign(static_cast<std::size_t>(n_classes),
                     std::vector<double>(dim, 0.0));
  model.variances.assign(static_cast<std::size_t>(n_classes),
                         std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto c = static_cast<std::size_t>(y[i]);
    for (std::size_t d = 0; d < dim; ++d) model.means[c][d] += x[i][d];
  }
  for (int c = 0; c < n_classes; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    const double n = static_cast<double>(class_count[cc]);
    model.priors[cc] = n / static_cast<double>(x.size());
    for (std::size_t d = 0; d < dim; ++d) model.means[cc][d] /= n;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto c = static_cast<std::size_t>(y[i]);
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = x[i][d] - model.means[c][d];
      model.variances[c][d] += diff * diff;
    }
  }
  for (int c = 0; c < n_classes; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    const double n = static_cast<double>(class_count[cc]);
    for (std::size_t d = 0; d < dim; ++d)
      model.variances[cc][d] =
          std::max(model.variances[cc][d] / n, var_floor);
  }
  return model;
}

Prediction predict_gnb(const GnbModel& model, const std::vector<double>& v) {
  if (model.means.empty() || v.size() != model.means.front().size())
    throw SchemaMismatch("GNB input dimension mismatch");
  Prediction p;
  p.scores.resize(static_cast<std::size_t>(model.n_classes));
  for (int c = 0; c < model.n_classes; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    double score = std::log(model.priors[cc]);
    for (std::size_t d = 0; d < v.size(); ++d) {
      const double var = model.variances[cc][d];
      const double diff = v[d] - model.means[cc][d];
      score += -0.5 * std::log(2.0 * std::numbers::pi * var) -
               diff * diff / (2.0 * var);
    }
    p.scores[cc] = score;
  }
  p.label = argmax_lowest(p.scores);
  return p;
}

// --- Linear SVM ---

LinearSvmModel train_linear_svm(const Matrix& x, const std::vector<int>& y,
                                int n_classes, double lambda, int epochs,
                                std::uint64_t seed) {
  check_shape(x, y, n_classes);
  if (std::set<int>(y.begin(), y.end()).size() < 2)
    throw DegenerateData("SVM training needs at least 2 classes present");
  const std::size_t dim = x.front().size();

  LinearSvmModel model;
  model.n_classes = n_classes;
  model.lambda = lambda;
  model.epochs = epochs;
  model.seed = seed;
  model.weights.assign(static_cast<std::size_t>(n_classes),
                       std::vector<double>(dim, 0.0));
  model.bias.assign(static_cast<std::size_t>(n_classes), 0.0);

  for (int c = 0; c < n_classes; ++c) {
    auto& w = model.weights[static_cast<std::size_t>(c)];
    double& b = model.bias[static_cast<std::size_t>(c)];
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(c)));
    std::vector<std::size_t> order(x.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::uint64_t step = 0;
    for (int epoch = 0; epoch < epochs; ++epoch) {
      rng.shuffle(order);
      for (const std::size_t i : order) {
        ++step;
        const double eta = 1.0 / (lambda * static_cast<double>(step));
        const double target = (y[i] == c) ? 1.0 : -1.0;
        double margin = b;
        for (std::size_t d = 0; d < dim; ++d) margin += w[d] * x[i][d];
        margin *= target;
        const double decay = 1.0 - eta * lambda;
        for (std::size_t d = 0; d < dim; ++d) w[d] *= decay;
        if (margin < 1.0) {
          for (std::size_t d = 0; d < dim; ++d)
            w[d] += eta * target * x[i][d];
          b += eta * lambda * target;  // 1/t step keeps the bias stable
        }
      }
    }
  }
  return model;
}

Prediction predict_linear(const LinearSvmModel& model,
                          const std::vector<double>& v) {
  if (model.weights.empty() || v.size() != model.weights.front().size())
    throw SchemaMismatch("SVM input dimension mismatch");
  Prediction p;
  p.scores.resize(static_cast<std::size_t>(model.n_classes));
  for (int c = 0; c < model.n_classes; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    double score = model.bias[cc];
    for (std::size_t d = 0; d < v.size(); ++d)
      score += model.weights[cc][d] * v[d];
    p.scores[cc] = score;
  }
  p.label = argmax_lowest(p.scores);
  return p;
}

// --- Decision tree ---

namespace {

struct TreeBuilder {
  const Matrix& x;
  const std::vector<int>& y;
  int n_classes;
  TreeConfig cfg;
  Rng* rng = nullptr;          // set for forest trees
  std::size_t n_features_per_split = 0;  // 0 = all
  TreeModel model;

  double gini(const std::vector<std::uint64_t>& counts,
              std::uint64_t total) const {
    if (total == 0) return 0.0;
    double g = 1.0;
    for (const std::uint64_t c : counts) {
      const double p = static_cast<double>(c) / static_cast<double>(total);
      g -= p * p;
    }
    return g;
  }

  std::vector<std::uint64_t> count_classes(
      const std::vector<std::size_t>& idx) const {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_classes), 0);
    for (const std::size_t i : idx) ++counts[static_cast<std::size_t>(y[i])];
    return counts;
  }

  std::vector<std::size_t> candidate_dims() const {
    const std::size_t dim = x.front().size();
    std::vector<std::size_t> dims(dim);
    for (std::size_t d = 0; d < dim; ++d) dims[d] = d;
    if (rng == nullptr || n_features_per_split == 0 ||
        n_features_per_split >= dim)
      return dims;
    // Deterministic sample without replacement.
    rng->shuffle(dims);
    dims.resize(n_features_per_split);
    std::sort(dims.begin(), dims.end());
    return dims;
  }

  // Lowest weighted Gini; ties break to the lowest dim, lowest threshold.
  bool find_split(const std::vector<std::size_t>& idx,
                  const std::vector<std::size_t>& dims, std::size_t& out_dim,
                  double& out_threshold) const {
    bool found = false;
    double best = 0.0;
    for (const std::size_t d : dims) {
      std::vector<double> values;
      values.reserve(idx.size());
      for (const std::size_t i : idx) values.push_back(x[i][d]);
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      for (std::size_t v = 0; v + 1 < values.size(); ++v) {
        const double threshold = values[v] + (values[v + 1] - values[v]) / 2.0;
        std::vector<std::uint64_t> left(static_cast<std::size_t>(n_classes),
                                        0);
        std::vector<std::uint64_t> right(static_cast<std::size_t>(n_classes),
                                         0);
        std::uint64_t nl = 0, nr = 0;
        for (const std::size_t i : idx) {
          if (x[i][d] <= threshold) {
            ++left[static_cast<std::size_t>(y[i])];
            ++nl;
          } else {
            ++right[static_cast<std::size_t>(y[i])];
            ++nr;
          }
        }
        if (nl < cfg.min_leaf || nr < cfg.min_leaf) continue;
        const double total = static_cast<double>(nl + nr);
        const double score = (static_cast<double>(nl) / total) * gini(left, nl) +
                             (static_cast<double>(nr) / total) * gini(right, nr);
        if (!found || score < best) {
          found = true;
          best = score;
          out_dim = d;
          out_threshold = threshold;
        }
      }
    }
    return found;
  }

  int build(const std::vector<std::size_t>& idx, int depth) {
    const int node_id = static_cast<int>(model.nodes.size());
    model.nodes.emplace_back();
    auto counts = count_classes(idx);
    const bool pure =
        std::count_if(counts.begin(), counts.end(),
                      [](std::uint64_t c) { return c > 0; }) <= 1;
    const bool depth_reached = cfg.max_depth >= 0 && depth >= cfg.max_depth;
    std::size_t split_dim = 0;
    double split_threshold = 0.0;
    bool can_split = false;
    if (!pure && !depth_reached && idx.size() >= 2 * cfg.min_leaf) {
      can_split = find_split(idx, candidate_dims(), split_dim,
                             split_threshold);
      if (!can_split && rng != nullptr) {
        // Sampled dims may all be constant; retry over every dim so a
        // consistent dataset still separates.
        std::vector<std::size_t> all(x.front().size());
        for (std::size_t d = 0; d < all.size(); ++d) all[d] = d;
        can_split = find_split(idx, all, split_dim, split_threshold);
      }
    }
    if (!can_split) {
      model.nodes[static_cast<std::size_t>(node_id)].counts =
          std::move(counts);
      return node_id;
    }
    std::vector<std::size_t> left_idx, right_idx;
    for (const std::size_t i : idx) {
      if (x[i][split_dim] <= split_threshold)
        left_idx.push_back(i);
      else
        right_idx.push_back(i);
    }
    const int left = build(left_idx, depth + 1);
    const int right = build(right_idx, depth + 1);
    auto& node = model.nodes[static_cast<std::size_t>(node_id)];
    node.leaf = false;
    node.dim = static_cast<int>(split_dim);
    node.threshold = split_threshold;
    node.left = left;
    node.right = right;
    return node_id;
  }
};

}  // namespace

TreeModel train_tree(const Matrix& x, const std::vector<int>& y, int n_classes,
                     const TreeConfig& cfg) {
  check_shape(x, y, n_classes);
  TreeBuilder builder{x, y, n_classes, cfg};
  builder.model.n_classes = n_classes;
  std::vector<std::size_t> idx(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  builder.build(idx, 0);
  return builder.model;
}

Prediction predict_tree(const TreeModel& model, const std::vector<double>& v) {
  if (model.nodes.empty()) throw CorruptModel("empty decision tree");
  std::size_t node = 0;
  while (!model.nodes[node].leaf) {
    const auto& n = model.nodes[node];
    if (n.dim < 0 || static_cast<std::size_t>(n.dim) >= v.size())
      throw SchemaMismatch("tree split dimension out of range");
    node = static_cast<std::size_t>(v[static_cast<std::size_t>(n.dim)] <=
                                            n.threshold
                                        ? n.left
                                        : n.right);
  }
  const auto& counts = model.nodes[node].counts;
  std::uint64_t total = 0;
  for (const std::uint64_t c : counts) total += c;
  Prediction p;
  p.scores.resize(counts.size());
  for (std::size_t c = 0; c < counts.size(); ++c)
    p.scores[c] = static_cast<double>(counts[c]) / static_cast<double>(total);
  p.label = argmax_lowest(p.scores);
  return p;
}

ForestModel train_forest(const Matrix& x, const std::vector<int>& y,
                         int n_classes, int n_estimators, std::uint64_t seed,
                         const TreeConfig& cfg) {
  check_shape(x, y, n_classes);
  if (n_estimators < 1) throw ConfigError("forest needs >= 1 estimator");
  const std::size_t dim = x.front().size();
  const auto mtry = static_cast<std::size_t>(
      std::max(1.0, std::floor(std::sqrt(static_cast<double>(dim)))));

  ForestModel forest;
  forest.n_classes = n_classes;
  forest.seed = seed;
  forest.trees.reserve(static_cast<std::size_t>(n_estimators));
  for (int t = 0; t < n_estimators; ++t) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
    std::vector<std::size_t> idx(x.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      idx[i] = rng.next_below(x.size());
    std::sort(idx.begin(), idx.end());
    TreeBuilder builder{x, y, n_classes, cfg, &rng, mtry};
    builder.model.n_classes = n_classes;
    builder.build(idx, 0);
    forest.trees.push_back(std::move(builder.model));
  }
  return forest;
}

Prediction predict_forest(const ForestModel& model,
                          const std::vector<double>& v) {
  if (model.trees.empty()) throw CorruptModel("empty forest");
  Prediction p;
  p.scores.assign(static_cast<std::size_t>(model.n_classes), 0.0);
  for (const auto& tree : model.trees) {
    const auto vote = predict_tree(tree, v);
    p.scores[static_cast<std::size_t>(vote.label)] += 1.0;
  }
  for (double& s : p.scores) s /= static_cast<double>(model.trees.size());
  p.label = argmax_lowest(p.scores);
  return p;
}

// --- Serialization ---

ClassifierKind classifier_kind_from_string(const std::string& s) {
  if (s == "gnb") return ClassifierKind::gnb;
  if (s == "linear-svm") return ClassifierKind::linear_svm;
  if (s == "tree") return ClassifierKind::tree;
  if (s == "forest") return ClassifierKind::forest;
  throw ConfigError("unknown classifier: " + s);
}

std::string to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::gnb:
      return "gnb";
    case ClassifierKind::linear_svm:
      return "linear-svm";
    case ClassifierKind::tree:
      return "tree";
    case ClassifierKind::forest:
      return "forest";
  }
  return "?";
}

namespace {

void write_vec(binio::Writer& w, const std::vector<double>& v) {
  w.u64(v.size());
  for (double d : v) w.f64(d);
}

std::vector<double> read_vec(binio::Reader& r) {
  const std::uint64_t n = r.u64();
  std::vector<double> v;
  v.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) v.push_back(r.f64());
  return v;
}

void write_tree(binio::Writer& w, const TreeModel& tree) {
  w.u32(static_cast<std::uint32_t>(tree.n_classes));
  w.u64(tree.nodes.size());
  for (const auto& n : tree.nodes) {
    w.u8(n.leaf ? 1 : 0);
    if (n.leaf) {
      w.u64(n.counts.size());
      for (const std::uint64_t c : n.counts) w.u64(c);
    } else {
      w.u32(static_cast<std::uint32_t>(n.dim));
      w.f64(n.threshold);
      w.u32(static_cast<std::uint32_t>(n.left));
      w.u32(static_cast<std::uint32_t>(n.right));
    }
  }
}

TreeModel read_tree(binio::Reader& r) {
  TreeModel tree;
  tree.n_classes = static_cast<int>(r.u32());
  const std::uint64_t n_nodes = r.u64();
  for (std::uint64_t i = 0; i < n_nodes; ++i) {
    TreeNode node;
    node.leaf = r.u8() != 0;
    if (node.leaf) {
      const std::uint64_t nc = r.u64();
      for (std::uint64_t c = 0; c < nc; ++c) node.counts.push_back(r.u64());
    } else {
      node.dim = static_cast<int>(r.u32());
      node.threshold = r.f64();
      node.left = static_cast<int>(r.u32());
      node.right = static_cast<int>(r.u32());
    }
    tree.nodes.push_back(std::move(node));
  }
  return tree;
}

}  // namespace

void save_model(const ClassifierModel& model,
                const std::filesystem::path& path) {
  binio::Writer w;
  w.magic(kModelMagic);
  w.u8(kModelVersion);
  w.u32(static_cast<std::uint32_t>(model.schema.names.size()));
  for (const auto& name : model.schema.names) w.str(name);
  write_vec(w, model.scaler.mean);
  write_vec(w, model.scaler.stddev);
  w.u8(static_cast<std::uint8_t>(model.kind()));
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GnbModel>) {
          w.u32(static_cast<std::uint32_t>(m.n_classes));
          write_vec(w, m.priors);
          for (const auto& row : m.means) write_vec(w, row);
          for (const auto& row : m.variances) write_vec(w, row);
        } else if constexpr (std::is_same_v<T, LinearSvmModel>) {
          w.u32(static_cast<std::uint32_t>(m.n_classes));
          w.f64(m.lambda);
          w.u32(static_cast<std::uint32_t>(m.epochs));
          w.u64(m.seed);
          for (const auto& row : m.weights) write_vec(w, row);
          write_vec(w, m.bias);
        } else if constexpr (std::is_same_v<T, TreeModel>) {
          write_tree(w, m);
        } else {
          w.u32(static_cast<std::uint32_t>(m.n_classes));
          w.u64(m.seed);
          w.u32(static_cast<std::uint32_t>(m.trees.size()));
          for (const auto& tree : m.trees) write_tree(w, tree);
        }
      },
      model.model);
  binio::atomic_write(path, w.buffer());
}

ClassifierModel load_model(const std::filesystem::path& path) {
  binio::Reader r(binio::read_file(path));
  r.expect_magic(kModelMagic);
  const auto version = r.u8();
  if (version != kModelVersion)
    throw VersionMismatch("classifier model version " +
                          std::to_string(version) + ", expected " +
                          std::to_string(kModelVersion));
  ClassifierModel model;
  const auto n_names = r.u32();
  for (std::uint32_t i = 0; i < n_names; ++i)
    model.schema.names.push_back(r.str());
  model.scaler.mean = read_vec(r);
  model.scaler.stddev = read_vec(r);
  const auto kind = static_cast<ClassifierKind>(r.u8());
  switch (kind) {
    case ClassifierKind::gnb: {
      GnbModel m;
      m.n_classes = static_cast<int>(r.u32());
      m.priors = read_vec(r);
      for (int c = 0; c < m.n_classes; ++c) m.means.push_back(read_vec(r));
      for (int c = 0; c < m.n_classes; ++c)
        m.variances.push_back(read_vec(r));
      model.model = std::move(m);
      break;
    }
    case ClassifierKind::linear_svm: {
      LinearSvmModel m;
      m.n_classes = static_cast<int>(r.u32());
      m.lambda = r.f64();
      m.epochs = static_cast<int>(r.u32());
      m.seed = r.u64();
      for (int c = 0; c < m.n_classes; ++c) m.weights.push_back(read_vec(r));
      m.bias = read_vec(r);
      model.model = std::move(m);
      break;
    }
    case ClassifierKind::tree: {
      model.model = read_tree(r);
      break;
    }
    case ClassifierKind::forest: {
      ForestModel m;
      m.n_classes = static_cast<int>(r.u32());
      m.seed = r.u64();
      const auto n_trees = r.u32();
      for (std::uint32_t t = 0; t < n_trees; ++t)
        m.trees.push_back(read_tree(r));
      model.model = std::move(m);
      break;
    }
    default:
      throw CorruptModel("unknown classifier kind byte");
  }
  if (!r.at_end()) throw CorruptModel("trailing bytes in model file");
  return model;
}

Prediction predict(const ClassifierModel& model, const FeatureVector& raw) {
  const FeatureVector scaled = transform(model.scaler, raw);
  return std::visit(
      [&](const auto& m) -> Prediction {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, GnbModel>) {
          return predict_gnb(m, scaled.values);
        } else if constexpr (std::is_same_v<T, LinearSvmModel>) {
          return predict_linear(m, scaled.values);
        } else if constexpr (std::is_same_v<T, TreeModel>) {
          return predict_tree(m, scaled.values);
        } else {
          return predict_forest(m, scaled.values);
        }
      },
      model.model);
}

}  // namespace readability
