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

#ifndef XAILAB_FOREST_MODEL_HPP_
#define XAILAB_FOREST_MODEL_HPP_

#include <cstdint>
#include <vector>

#include "xailab/dataset.hpp"
#include "xailab/model.hpp"

namespace xailab {

struct ForestHyper {
  std::size_t n_trees = 100;
  std::size_t max_depth = 8;
  std::uint64_t seed = 0;
  std::size_t mtry = 0;  // candidate features per split; 0 = sqrt(M), clamped to M
  double vote_threshold = 0.5;  // leaf votes class 1 iff its class-1 fraction exceeds this
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int vote = 0;
};

using Tree = std::vector<TreeNode>;

// Bagged axis-aligned decision trees grown on Gini impurity with sqrt(M)
// feature subsampling per node. Each tree votes a hard class at its leaf;
// predict_proba reports the fraction of trees voting class 1.
class ForestModel : public BlackBoxModel {
 public:
  ForestModel(std::vector<Tree> trees, ForestHyper hyper,
              std::size_t n_features);

  std::array<double, 2> predict_proba(const Vector& row) const override;

  int tree_vote(std::size_t tree_index, const Vector& row) const;
  const std::vector<Tree>& trees() const { return trees_; }
  const ForestHyper& hyper() const { return hyper_; }
  std::size_t n_features() const { return n_features_; }

 private:
  std::vector<Tree> trees_;
  ForestHyper hyper_;
  std::size_t n_features_;
};

ModelPtr train_forest(const Dataset& train, const ForestHyper& hyper);

}  // namespace xailab

#endif  // XAILAB_FOREST_MODEL_HPP_
