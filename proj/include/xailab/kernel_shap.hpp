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

#ifndef XAILAB_KERNEL_SHAP_HPP_
#define XAILAB_KERNEL_SHAP_HPP_

#include <cstdint>

#include "xailab/attribution.hpp"
#include "xailab/dataset.hpp"
#include "xailab/model.hpp"

namespace xailab {

struct ShapConfig {
  std::size_t n_coalitions = 256;  // sampled mode only; must be >= 2M
  Vector background;               // single reference row
  std::size_t exact_threshold = 12;  // enumerate all 2^M coalitions when M <= this
};

// (M-1) / (C(M,s) * s * (M-s)) for 1 <= s <= M-1; returns +infinity for the
// s = 0 and s = M coalitions, which callers must absorb into equality
// constraints instead of regression weights.
double shapley_kernel_weight(std::size_t m, std::size_t s);

// Row of `rows` minimizing the summed Euclidean distance to all other rows;
// the default single-row background.
Vector medoid_row(const Matrix& rows);

// Weighted least squares over coalitions with shapley_kernel_weight weights,
// under two equality constraints: g(empty) = f(background) fixes the
// intercept and g(full) = f(origin) fixes the weight sum. Enumerates all
// 2^M coalitions when M <= exact_threshold, otherwise samples n_coalitions
// size-uniform masks and keeps the distinct ones.
AttributionVector explain_kernel_shap(const BlackBoxModel& model,
                                      const Vector& origin,
                                      const ShapConfig& config,
                                      std::uint64_t seed);

}  // namespace xailab

#endif  // XAILAB_KERNEL_SHAP_HPP_
