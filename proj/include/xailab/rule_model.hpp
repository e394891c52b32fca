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

#ifndef XAILAB_RULE_MODEL_HPP_
#define XAILAB_RULE_MODEL_HPP_

#include <cstddef>

#include "xailab/model.hpp"
#include "xailab/schema.hpp"

namespace xailab {

// Single-feature rule. The decision is class 1 iff the deciding cell matches
// trigger_value (when positive_when_match) and confidence sets how far the
// reported probability sits from 0.5. Cells between trigger values blend
// linearly, so a half-masked binary cell reports exactly 0.5.
class RuleModel : public BlackBoxModel {
 public:
  RuleModel(std::size_t feature_index, double trigger_value,
            bool positive_when_match, double confidence);

  std::array<double, 2> predict_proba(const Vector& row) const override;

  std::size_t feature_index() const { return feature_index_; }
  double trigger_value() const { return trigger_value_; }
  bool positive_when_match() const { return positive_when_match_; }
  double confidence() const { return confidence_; }

 private:
  std::size_t feature_index_;
  double trigger_value_;
  bool positive_when_match_;
  double confidence_;
};

// Class 1 iff the sensitive feature equals category 1, probabilities {0, 1}.
ModelPtr make_biased_rule(const FeatureSchema& schema);

// Class 1 iff the chosen uncorrelated feature equals category 1. The
// confidence knob softens the reported probabilities without moving the
// decision boundary.
ModelPtr make_unbiased_rule(const FeatureSchema& schema,
                            std::size_t which_uncorrelated,
                            double confidence = 1.0);

}  // namespace xailab

#endif  // XAILAB_RULE_MODEL_HPP_
