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

#include "xailab/synthetic.hpp"

#include <string>

#include "xailab/error.hpp"
#include "xailab/rng.hpp"

namespace xailab {

Dataset generate_synthetic(const SyntheticConfig& config) {
  if (config.n_rows < 10)
    throw Error("core", "generate_synthetic needs n_rows >= 10");
  if (!(config.bias_strength > 0.5 && config.bias_strength <= 1.0))
    throw Error("core", "bias_strength must lie in (0.5, 1]");

  FeatureSchema schema;
  schema.features.push_back(
      {"sensitive", FeatureKind::kCategorical, {"0", "1"}});
  for (std::size_t k = 0; k < config.n_noise_features; ++k)
    schema.features.push_back(
        {"noise_" + std::to_string(k + 1), FeatureKind::kContinuous, {}});
  for (std::size_t u = 0; u < config.n_uncorrelated; ++u) {
    schema.features.push_back(
        {"unrelated_" + std::to_string(u + 1), FeatureKind::kCategorical,
         {"0", "1"}});
    schema.uncorrelated_indices.push_back(1 + config.n_noise_features + u);
  }
  schema.sensitive_index = 0;
  schema.label_name = "label";
  schema.validate();

  Dataset data;
  data.schema = schema;
  data.x = Matrix(config.n_rows, schema.n_features());
  data.labels.resize(config.n_rows);

  Rng rng(Rng::derive(config.seed, "synthetic"));
  for (std::size_t i = 0; i < config.n_rows; ++i) {
    const int sensitive = rng.uniform01() < 0.5 ? 0 : 1;
    data.x(i, 0) = static_cast<double>(sensitive);
    const bool agree = rng.uniform01() < config.bias_strength;
    data.labels[i] = agree ? sensitive : 1 - sensitive;
    for (std::size_t k = 0; k < config.n_noise_features; ++k)
      data.x(i, 1 + k) = rng.normal();
    for (std::size_t u = 0; u < config.n_uncorrelated; ++u)
      data.x(i, 1 + config.n_noise_features + u) =
          rng.uniform01() < 0.5 ? 0.0 : 1.0;
  }
  data.validate();
  return data;
}

}  // namespace xailab
