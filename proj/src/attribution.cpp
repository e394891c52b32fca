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

#include "xailab/attribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace xailab {

std::vector<std::size_t> rank_features(const AttributionVector& attr) {
  std::vector<std::size_t> order(attr.weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return std::abs(attr.weights[a]) >
                            std::abs(attr.weights[b]);
                   });
  return order;
}

}  // namespace xailab
