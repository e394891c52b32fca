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

#ifndef XAILAB_PERTURB_HPP_
#define XAILAB_PERTURB_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "xailab/dataset.hpp"
#include "xailab/standardize.hpp"

namespace xailab {

using CoalitionMask = std::vector<std::uint8_t>;

struct PerturbationBatch {
  Vector origin;
  Matrix rows{0, 0};
  std::vector<CoalitionMask> masks;  // one per row in coalition mode, else empty
  std::uint64_t seed = 0;
};

// Noise-style neighborhood: continuous cells get origin + eps * std with eps
// standard normal; categorical cells are resampled from their empirical
// frequency table with probability 0.5 and kept otherwise.
PerturbationBatch lime_perturb(const Vector& origin,
                               const StandardizationStats& stats,
                               std::size_t n, std::uint64_t seed);

// Masked-in features take origin values, masked-out take background values.
Vector apply_mask(const CoalitionMask& mask, const Vector& origin,
                  const Vector& background);

// Coalition-style neighborhood: each sample draws a size s uniform on
// {1..M-1}, then a uniform mask of that size, and blends origin with
// background through apply_mask.
PerturbationBatch shap_perturb(const Vector& origin, const Vector& background,
                               std::size_t n, std::uint64_t seed);

enum class PerturbMode { kLime, kShap };

// Labeled set for the in-distribution detector: the real rows of x labeled 0
// and n_per_instance perturbed rows per instance labeled 1, except that a
// perturbed row exactly equal to some real row is labeled 0. Output order is
// shuffled by seed. Coalition mode blends toward `background` (defaults to
// the per-column mean of x). The returned schema declares every column
// continuous (blended cells fall between category codes) under the label
// name "is_ood".
Dataset build_ood_training_set(const Dataset& x, PerturbMode mode,
                               std::size_t n_per_instance, std::uint64_t seed,
                               const std::optional<Vector>& background = {});

}  // namespace xailab

#endif  // XAILAB_PERTURB_HPP_
