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

#ifndef XAILAB_SYNTHETIC_HPP_
#define XAILAB_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>

#include "xailab/dataset.hpp"

namespace xailab {

struct SyntheticConfig {
  std::size_t n_rows = 0;
  std::size_t n_noise_features = 0;
  double bias_strength = 0.0;  // P(label == sensitive), must be in (0.5, 1]
  std::size_t n_uncorrelated = 0;
  std::uint64_t seed = 0;
};

// Columns in order: one binary sensitive feature "sensitive" (fair coin),
// then continuous "noise_1..noise_K" (standard normal, independent of the
// label), then binary "unrelated_1..unrelated_U" (fair coins, independent of
// everything). The label copies the sensitive value with probability
// bias_strength and flips it otherwise. Binary columns use categories
// {"0", "1"}; the label column is named "label".
Dataset generate_synthetic(const SyntheticConfig& config);

}  // namespace xailab

#endif  // XAILAB_SYNTHETIC_HPP_
