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

#include "xailab/rule_model.hpp"

#include <algorithm>
#include <cmath>

#include "xailab/error.hpp"

namespace xailab {

RuleModel::RuleModel(std::size_t feature_index, double trigger_value,
                     bool positive_when_match, double confidence)
    : feature_index_(feature_index),
      trigger_value_(trigger_value),
      positive_when_match_(positive_when_match),
      confidence_(confidence) {
  if (!(confidence > 0.5 && confidence <= 1.0))
    throw Error("models", "rule confidence must lie in (0.5, 1]");
}

std::array<double, 2> RuleModel::predict_proba(const Vector& row) const {
  if (feature_index_ >= row.size())
    throw Error("models", "rule feature index out of range for row");
  const double match =
      std::max(0.0, 1.0 - std::abs(row[feature_index_] - trigger_value_));
  double p1 = match * confidence_ + (1.0 - match) * (1.0 - confidence_);
  if (!positive_when_match_) p1 = 1.0 - p1;
  return {1.0 - p1, p1};
}

ModelPtr make_biased_rule(const FeatureSchema& schema) {
  schema.validate();
  const auto& f = schema.features[schema.sensitive_index];
  if (f.kind != FeatureKind::kCategorical || f.categories.size() != 2)
    throw Error("models", "sensitive feature must be binary categorical");
  return std::make_shared<RuleModel>(schema.sensitive_index, 1.0, true, 1.0);
}

ModelPtr make_unbiased_rule(const FeatureSchema& schema,
                            std::size_t which_uncorrelated,
                            double confidence) {
  schema.validate();
  if (!schema.is_uncorrelated(which_uncorrelated))
    throw Error("models", "feature " + std::to_string(which_uncorrelated) +
                              " is not declared uncorrelated");
  const auto& f = schema.features[which_uncorrelated];
  if (f.kind != FeatureKind::kCategorical || f.categories.size() != 2)
    throw Error("models", "uncorrelated feature must be binary categorical");
  return std::make_shared<RuleModel>(which_uncorrelated, 1.0, true,
                                     confidence);
}

}  // namespace xailab
