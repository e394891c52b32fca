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

#ifndef XAILAB_SHLIME_HPP_
#define XAILAB_SHLIME_HPP_

#include <string>

#include "xailab/kernel_shap.hpp"
#include "xailab/lime.hpp"

namespace xailab {

enum class SignPolicy { kSignedProduct, kLimeSignShapMagnitude };

std::string sign_policy_name(SignPolicy policy);
SignPolicy sign_policy_from_name(const std::string& name);

struct ShlimeConfig {
  LimeConfig lime;
  ShapConfig shap;
  SignPolicy sign_policy = SignPolicy::kSignedProduct;
};

// Per-feature product of the two sub-explanations: the LIME and SHAP
// sub-explainers run on seeds (seed, seed + 1), then phi_i is
// lime_i * shap_i under signed_product, or lime_i * |shap_i| under
// lime_sign_shap_magnitude. The intercept carries over from SHAP.
AttributionVector explain_shlime_basic(const BlackBoxModel& model,
                                       const Vector& origin,
                                       const StandardizationStats& stats,
                                       const ShlimeConfig& config,
                                       std::uint64_t seed);

}  // namespace xailab

#endif  // XAILAB_SHLIME_HPP_
