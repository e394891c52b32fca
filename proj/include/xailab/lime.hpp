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

#ifndef XAILAB_LIME_HPP_
#define XAILAB_LIME_HPP_

#include <cstdint>

#include "xailab/attribution.hpp"
#include "xailab/model.hpp"
#include "xailab/standardize.hpp"

namespace xailab {

struct LimeConfig {
  std::size_t n_samples = 128;
  double sigma = 0.0;       // 0 resolves to the default 0.75 * sqrt(M)
  std::size_t k_top = 0;    // sparsity budget; 0 resolves to M (keep all)
  double ridge = 1e-3;
};

// exp(-d^2 / sigma^2); d is Euclidean distance in standardized space.
double lime_kernel(double distance, double sigma);

// Local surrogate for the model's class-1 probability: perturb around the
// origin, weight samples by kernel distance, fit ridge regression on the
// standardized design (intercept unpenalized), then keep the k_top
// largest-|weight| features and refit on those alone.
AttributionVector explain_lime(const BlackBoxModel& model,
                               const Vector& origin,
                               const StandardizationStats& stats,
                               const LimeConfig& config, std::uint64_t seed);

}  // namespace xailab

#endif  // XAILAB_LIME_HPP_
