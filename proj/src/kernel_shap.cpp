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

#include "xailab/kernel_shap.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "xailab/error.hpp"
#include "xailab/perturb.hpp"

namespace xailab {

namespace {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i)
    c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

std::string mask_key(const CoalitionMask& mask) {
  std::string key(mask.size(), '0');
  for (std::size_t j = 0; j < mask.size(); ++j)
    if (mask[j]) key[j] = '1';
  return key;
}

}  // namespace

double shapley_kernel_weight(std::size_t m, std::size_t s) {
  if (m < 2) throw Error("explainers", "kernel weight needs M >= 2");
  if (s > m) throw Error("explainers", "coalition size exceeds M");
  if (s == 0 || s == m) return std::numeric_limits<double>::infinity();
  return static_cast<double>(m - 1) /
         (binomial(m, s) * static_cast<double>(s) *
          static_cast<double>(m - s));
}

Vector medoid_row(const Matrix& rows) {
  if (rows.rows == 0) throw Error("explainers", "medoid of an empty matrix");
  std::size_t best = 0;
  double best_sum = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows.rows; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < rows.rows; ++k) {
      double d2 = 0.0;
      for (std::size_t j = 0; j < rows.cols; ++j) {
        const double diff = rows(i, j) - rows(k, j);
        d2 += diff * diff;
      }
      sum += std::sqrt(d2);
    }
    if (sum < best_sum) {
      best_sum = sum;
      best = i;
    }
  }
  return rows.row(best);
}

AttributionVector explain_kernel_shap(const BlackBoxModel& model,
                                      const Vector& origin,
                                      const ShapConfig& config,
                                      std::uint64_t seed) {
  const std::size_t m = origin.size();
  if (m < 2) throw Error("explainers", "kernel SHAP needs M >= 2 features");
  if (config.background.size() != m)
    throw Error("explainers", "background width does not match origin");
  if (config.exact_threshold > 20)
    throw Error("explainers", "exact_threshold must be <= 20");

  const bool exact = m <= config.exact_threshold;
  std::vector<CoalitionMask> masks;
  if (exact) {
    const std::size_t total = std::size_t{1} << m;
    masks.reserve(total - 2);
    for (std::size_t bits = 1; bits + 1 < total; ++bits) {
      CoalitionMask mask(m, 0);
      for (std::size_t j = 0; j < m; ++j)
        if (bits & (std::size_t{1} << j)) mask[j] = 1;
      masks.push_back(std::move(mask));
    }
  } else {
    if (config.n_coalitions < 2 * m)
      throw Error("explainers", "n_coalitions must be >= 2M (need >= " +
                                    std::to_string(2 * m) + ")");
    const PerturbationBatch batch =
        shap_perturb(origin, config.background, config.n_coalitions, seed);
    std::unordered_set<std::string> seen;
    for (const auto& mask : batch.masks)
      if (seen.insert(mask_key(mask)).second) masks.push_back(mask);
  }
  if (masks.size() < m - 1)
    throw Error("explainers",
                "too few distinct coalitions for a full-rank design; "
                "increase n_coalitions (minimum 2M = " +
                    std::to_string(2 * m) + ")");

  const double f_background = model.proba1(config.background);
  const double f_origin = model.proba1(origin);
  const double phi0 = f_background;
  const double delta = f_origin - phi0;

  // Substituting phi_M = delta - sum_{j<M} phi_j turns g(z) into
  // phi0 + z_M * delta + sum_{j<M} phi_j (z_j - z_M).
  const std::size_t n = masks.size();
  Matrix design(n, m - 1);
  Vector targets(n), weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CoalitionMask& mask = masks[i];
    std::size_t s = 0;
    for (std::uint8_t bit : mask) s += bit;
    weights[i] = shapley_kernel_weight(m, s);
    const double z_last = static_cast<double>(mask[m - 1]);
    for (std::size_t j = 0; j + 1 < m; ++j)
      design(i, j) = static_cast<double>(mask[j]) - z_last;
    const double f_blend =
        model.proba1(apply_mask(mask, origin, config.background));
    targets[i] = f_blend - phi0 - z_last * delta;
  }

  Vector head;
  try {
    head = weighted_least_squares(design, targets, weights, 0.0, -1);
  } catch (const Error&) {
    throw Error("explainers",
                "rank-deficient coalition design; increase n_coalitions "
                "(minimum 2M = " +
                    std::to_string(2 * m) + ")");
  }

  AttributionVector attr;
  attr.tag = "shap";
  attr.intercept = phi0;
  attr.weights.assign(m, 0.0);
  double head_sum = 0.0;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    attr.weights[j] = head[j];
    head_sum += head[j];
  }
  attr.weights[m - 1] = delta - head_sum;
  return attr;
}

}  // namespace xailab
