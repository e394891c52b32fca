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

#include "xailab/shlime.hpp"

#include <cmath>

#include "xailab/error.hpp"

namespace xailab {

std::string sign_policy_name(SignPolicy policy) {
  return policy == SignPolicy::kSignedProduct ? "signed_product"
                                              : "lime_sign_shap_magnitude";
}

SignPolicy sign_policy_from_name(const std::string& name) {
  if (name == "signed_product") return SignPolicy::kSignedProduct;
  if (name == "lime_sign_shap_magnitude")
    return SignPolicy::kLimeSignShapMagnitude;
  throw Error("ensemble", "unknown sign policy: " + name);
}

AttributionVector explain_shlime_basic(const BlackBoxModel& model,
                                       const Vector& origin,
                                       const StandardizationStats& stats,
                                       const ShlimeConfig& config,
                                       std::uint64_t seed) {
  AttributionVector lime;
  try {
    lime = explain_lime(model, origin, stats, config.lime, seed);
  } catch (const Error& e) {
    throw Error("ensemble", std::string("lime sub-explainer failed: ") +
                                e.what());
  }
  AttributionVector shap;
  try {
    shap = explain_kernel_shap(model, origin, config.shap, seed + 1);
  } catch (const Error& e) {
    throw Error("ensemble", std::string("shap sub-explainer failed: ") +
                                e.what());
  }

  AttributionVector attr;
  attr.tag = "shlime";
  attr.intercept = shap.intercept;
  attr.weights.assign(origin.size(), 0.0);
  for (std::size_t j = 0; j < origin.size(); ++j) {
    attr.weights[j] = config.sign_policy == SignPolicy::kSignedProduct
                          ? lime.weights[j] * shap.weights[j]
                          : lime.weights[j] * std::abs(shap.weights[j]);
  }
  return attr;
}

}  // namespace xailab
