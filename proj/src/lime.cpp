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

#include "xailab/lime.hpp"

#include <cmath>

#include "xailab/error.hpp"
#include "xailab/perturb.hpp"

namespace xailab {

double lime_kernel(double distance, double sigma) {
  if (!(sigma > 0.0)) throw Error("explainers", "kernel width must be > 0");
  return std::exp(-(distance * distance) / (sigma * sigma));
}

AttributionVector explain_lime(const BlackBoxModel& model,
                               const Vector& origin,
                               const StandardizationStats& stats,
                               const LimeConfig& config, std::uint64_t seed) {
  const std::size_t m = origin.size();
  if (m == 0) throw Error("explainers", "empty origin row");
  if (config.n_samples < 1)
    throw Error("explainers", "n_samples must be >= 1");
  const double sigma = config.sigma > 0.0
                           ? config.sigma
                           : 0.75 * std::sqrt(static_cast<double>(m));
  const std::size_t k_top = config.k_top == 0 ? m : config.k_top;
  if (k_top > m) throw Error("explainers", "sparsity budget exceeds M");
  if (config.ridge < 0.0)
    throw Error("explainers", "ridge strength must be >= 0");

  const PerturbationBatch batch =
      lime_perturb(origin, stats, config.n_samples, seed);
  const Vector origin_std = stats.standardize_row(origin);
  const std::size_t n = batch.rows.rows;

  Matrix design(n, m + 1);
  Vector targets(n), kernel_weights(n);
  double max_weight = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector raw = batch.rows.row(i);
    const Vector z = stats.standardize_row(raw);
    double d2 = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      design(i, j) = z[j];
      const double diff = z[j] - origin_std[j];
      d2 += diff * diff;
    }
    design(i, m) = 1.0;
    kernel_weights[i] = lime_kernel(std::sqrt(d2), sigma);
    max_weight = std::max(max_weight, kernel_weights[i]);
    targets[i] = model.proba1(raw);
  }
  if (max_weight < 1e-300)
    throw Error("explainers",
                "all kernel weights vanished; increase kernel width sigma");

  const Vector full = weighted_least_squares(design, targets, kernel_weights,
                                             config.ridge,
                                             static_cast<long>(m));

  AttributionVector attr;
  attr.tag = "lime";
  attr.weights.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) attr.weights[j] = full[j];
  attr.intercept = full[m];
  if (k_top == m) return attr;

  const auto order = rank_features(attr);
  std::vector<std::size_t> kept(order.begin(),
                                order.begin() + static_cast<long>(k_top));

  Matrix sub(n, k_top + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < k_top; ++k) sub(i, k) = design(i, kept[k]);
    sub(i, k_top) = 1.0;
  }
  const Vector refit = weighted_least_squares(sub, targets, kernel_weights,
                                              config.ridge,
                                              static_cast<long>(k_top));
  attr.weights.assign(m, 0.0);
  for (std::size_t k = 0; k < k_top; ++k) attr.weights[kept[k]] = refit[k];
  attr.intercept = refit[k_top];
  return attr;
}

}  // namespace xailab
