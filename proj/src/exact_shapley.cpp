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

#include "xailab/exact_shapley.hpp"

#include <bit>
#include <vector>

#include "xailab/error.hpp"

namespace xailab {

AttributionVector exact_shapley(const BlackBoxModel& model,
                                const Vector& origin,
                                const Vector& background) {
  const std::size_t m = origin.size();
  if (m == 0) throw Error("explainers", "empty origin row");
  if (background.size() != m)
    throw Error("explainers", "background width does not match origin");
  if (m > 20)
    throw Error("explainers",
                "exact Shapley supports at most 20 features (2^M calls)");

  const std::size_t total = std::size_t{1} << m;
  std::vector<double> value(total);
  Vector blend(m);
  for (std::size_t mask = 0; mask < total; ++mask) {
    for (std::size_t j = 0; j < m; ++j)
      blend[j] = (mask & (std::size_t{1} << j)) ? origin[j] : background[j];
    value[mask] = model.proba1(blend);
  }

  // 1 / (M * C(M-1, s)) is the ordering weight of a coalition of size s not
  // containing the target feature.
  Vector coeff(m);
  double c = 1.0;  // running C(M-1, s)
  for (std::size_t s = 0; s < m; ++s) {
    coeff[s] = 1.0 / (static_cast<double>(m) * c);
    c = c * static_cast<double>(m - 1 - s) / static_cast<double>(s + 1);
  }

  AttributionVector attr;
  attr.tag = "exact";
  attr.intercept = value[0];
  attr.weights.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    double phi = 0.0;
    for (std::size_t mask = 0; mask < total; ++mask) {
      if (mask & bit) continue;
      const std::size_t s = static_cast<std::size_t>(std::popcount(mask));
      phi += coeff[s] * (value[mask | bit] - value[mask]);
    }
    attr.weights[j] = phi;
  }
  return attr;
}

}  // namespace xailab
