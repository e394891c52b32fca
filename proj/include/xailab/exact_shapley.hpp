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

#ifndef XAILAB_EXACT_SHAPLEY_HPP_
#define XAILAB_EXACT_SHAPLEY_HPP_

#include "xailab/attribution.hpp"
#include "xailab/model.hpp"

namespace xailab {

// Brute-force Shapley values from all 2^M coalition evaluations, with
// v(S) = model output when features in S take origin values and the rest
// take background values. The intercept carries v(empty). Requires M <= 20.
AttributionVector exact_shapley(const BlackBoxModel& model,
                                const Vector& origin,
                                const Vector& background);

}  // namespace xailab

#endif  // XAILAB_EXACT_SHAPLEY_HPP_
