/*
 * Copyright 2026 The xailab authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "xailab/forest_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "xailab/error.hpp"
#include "xailab/rng.hpp"

namespace xailab {

namespace {

struct TreeBuilder {
  const Matrix& x;
  const std::vector<int>& labels;
  std::size_t max_depth;
  std::size_t mtry;
  double vote_threshold;
  Rng& rng;
  Tree nodes;

  int build(std::vector<std::size_t>& idx, std::size_t depth) {
    std::size_t count1 = 0;
    for (std::size_t i : idx) count1 += static_cast<std::size_t>(labels[i]);
    const std::size_t count = idx.size();
    const int majority = static_cast<double>(count1) >
                                 vote_threshold * static_cast<double>(count)
                             ? 1
                             : 0;

    if (depth >= max_depth || count < 2 || count1 == 0 || count1 == count)
      return make_leaf(majority);

    const double parent_impurity = gini(count1, count);
    int best_feature = -1;
    double best_threshold = 0.0;
    double best_score = parent_impurity;

    std::vector<std::size_t> candidates(x.cols);
    for (std::size_t j = 0; j < x.cols; ++j) candidates[j] = j;
    for (std::size_t k = 0; k < mtry; ++k) {
      const std::size_t pick =
          k + static_cast<std::size_t>(
                  rng.uniform_below(static_cast<std::uint64_t>(x.cols - k)));
      std::swap(candidates[k], candidates[pick]);
    }

    std::vector<std::size_t> order = idx;
    for (std::size_t k = 0; k < mtry; ++k) {
      const std::size_t j = candidates[k];
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return x(a, j) < x(b, j); });
      std::size_t left1 = 0;
      for (std::size_t i = 1; i < count; ++i) {
        left1 += static_cast<std::size_t>(labels[order[i - 1]]);
        if (x(order[i - 1], j) == x(order[i], j)) continue;
        const std::size_t right1 = count1 - left1;
        const double score =
            (static_cast<double>(i) * gini(left1, i) +
             static_cast<double>(count - i) * gini(right1, count - i)) /
            static_cast<double>(count);
        if (score < best_score - 1e-12) {
          best_score = score;
          best_feature = static_cast<int>(j);
          best_threshold = 0.5 * (x(order[i - 1], j) + x(order[i], j));
        }
      }
    }

    if (best_feature < 0) return make_leaf(majority);

    std::vector<std::size_t> left_idx, right_idx;
    for (std::size_t i : idx) {
      if (x(i, static_cast<std::size_t>(best_feature)) <= best_threshold)
        left_idx.push_back(i);
      else
        right_idx.push_back(i);
    }
    if (left_idx.empty() || right_idx.empty()) return make_leaf(majority);

    const int node = static_cast<int>(nodes.size());
    nodes.push_back({best_feature, best_threshold, -1, -1, 0});
    const int left = build(left_idx, depth + 1);
    const int right = build(right_idx, depth + 1);
    nodes[static_cast<std::size_t>(node)].left = left;
    nodes[static_cast<std::size_t>(node)].right = right;
    return node;
  }

  int make_leaf(int vote) {
    nodes.push_back({-1, 0.0, -1, -1, vote});
    return static_cast<int>(nodes.size()) - 1;
  }

  static double gini(std::size_t ones, std::size_t total) {
    if (total == 0) return 0.0;
    const double p = static_cast<double>(ones) / static_cast<double>(total);
    return 2.0 * p * (1.0 - p);
  }
};

int walk_tree(const Tree& tree, const Vector& row) {
  int node = 0;
  while (tree[static_cast<std::size_t>(node)].feature >= 0) {
    const auto& n = tree[static_cast<std::size_t>(node)];
    node = row[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left
                                                                   : n.right;
  }
  return tree[static_cast<std::size_t>(node)].vote;
}

}  // namespace

ForestModel::ForestModel(std::vector<Tree> trees, ForestHyper hyper,
                         std::size_t n_features)
    : trees_(std::move(trees)), hyper_(hyper), n_features_(n_features) {}

std::array<double, 2> ForestModel::predict_proba(const Vector& row) const {
  if (row.size() != n_features_)
    throw Error("models", "row width does not match forest model");
  std::size_t votes1 = 0;
  for (const auto& tree : trees_)
    votes1 += static_cast<std::size_t>(walk_tree(tree, row));
  const double p1 =
      static_cast<double>(votes1) / static_cast<double>(trees_.size());
  return {1.0 - p1, p1};
}

int ForestModel::tree_vote(std::size_t tree_index, const Vector& row) const {
  return walk_tree(trees_.at(tree_index), row);
}

ModelPtr train_forest(const Dataset& train, const ForestHyper& hyper) {
  train.validate();
  const std::size_t n = train.n_rows();
  if (n < 2) throw Error("models", "train_forest needs >= 2 rows");
  bool has0 = false, has1 = false;
  for (int y : train.labels) (y == 1 ? has1 : has0) = true;
  if (!has0 || !has1)
    throw Error("models", "train_forest needs both classes present");
  if (hyper.max_depth < 1) throw Error("models", "max_depth must be >= 1");
  if (hyper.n_trees < 1) throw Error("models", "n_trees must be >= 1");
  if (hyper.vote_threshold < 0.0 || hyper.vote_threshold >= 1.0)
    throw Error("models", "vote_threshold must lie in [0, 1)");

  const std::size_t m = train.n_features();
  std::size_t mtry = hyper.mtry;
  if (mtry == 0)
    mtry = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::lround(std::sqrt(
               static_cast<double>(m)))));
  mtry = std::min(mtry, m);

  std::vector<Tree> trees;
  trees.reserve(hyper.n_trees);
  for (std::size_t t = 0; t < hyper.n_trees; ++t) {
    Rng rng(Rng::derive(hyper.seed, "tree/" + std::to_string(t)));
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
      idx[i] = static_cast<std::size_t>(
          rng.uniform_below(static_cast<std::uint64_t>(n)));
    TreeBuilder builder{train.x, train.labels,         hyper.max_depth,
                        mtry,    hyper.vote_threshold, rng,
                        {}};
    builder.build(idx, 0);
    trees.push_back(std::move(builder.nodes));
  }
  return std::make_shared<ForestModel>(std::move(trees), hyper, m);
}

}  // namespace xailab
