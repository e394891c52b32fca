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

#ifndef XAILAB_ATTRIBUTION_HPP_
#define XAILAB_ATTRIBUTION_HPP_

#include <string>
#include <vector>

#include "xailab/linalg.hpp"

namespace xailab {

// Additive explanation g(z) = intercept + sum_i weights[i] * z_i. The tag
// names the producing explainer: "lime", "shap", "shlime", or "exact".
struct AttributionVector {
  double intercept = 0.0;
  Vector weights;
  std::string tag;
};

// Feature indices (0-based) ordered by |weight| descending, ties broken by
// ascending index.
std::vector<std::size_t> rank_features(const AttributionVector& attr);

}  // namespace xailab

#endif  // XAILAB_ATTRIBUTION_HPP_
