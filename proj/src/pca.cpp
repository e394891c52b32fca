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

#include "xailab/experiments.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "xailab/error.hpp"
#include "xailab/perturb.hpp"
#include "xailab/rng.hpp"

namespace xailab {

namespace {

// Applies the covariance of the centered matrix: out = X^T (X v) / n.
Vector apply_covariance(const Matrix& x, const Vector& v) {
  Vector out = matvec_transposed(x, matvec(x, v));
  for (auto& val : out) val /= static_cast<double>(x.rows);
  return out;
}

// Power iteration for the leading eigenvector of the (possibly deflated)
// covariance. Starts from the normalized all-ones direction so results are
// reproducible; stops when successive directions align to 1 - 1e-10.
Vector leading_direction(const Matrix& x, const Vector* deflate) {
  Vector v(x.cols, 1.0 / std::sqrt(static_cast<double>(x.cols)));
  if (deflate) {
    const double d = dot(v, *deflate);
    for (std::size_t j = 0; j < x.cols; ++j) v[j] -= d * (*deflate)[j];
    const double nv = norm2(v);
    if (nv > 1e-300)
      for (auto& val : v) val /= nv;
  }
  for (int iter = 0; iter < 1000; ++iter) {
    Vector next = apply_covariance(x, v);
    if (deflate) {
      const double d = dot(next, *deflate);
      for (std::size_t j = 0; j < x.cols; ++j) next[j] -= d * (*deflate)[j];
    }
    const double nn = norm2(next);
    if (nn <= 1e-300) return next;  // zero direction; caller checks variance
    for (auto& val : next) val /= nn;
    const double cosine = std::abs(dot(next, v));
    v = next;
    if (cosine >= 1.0 - 1e-10) break;
  }
  return v;
}

void canonicalize_sign(Vector& v) {
  std::size_t arg = 0;
  for (std::size_t j = 1; j < v.size(); ++j)
    if (std::abs(v[j]) > std::abs(v[arg])) arg = j;
  if (v[arg] < 0.0)
    for (auto& val : v) val = -val;
}

}  // namespace

PcaProjection run_pca(const Dataset& real, PerturbMode mode,
                      std::size_t n_per_instance, std::uint64_t seed) {
  real.validate();
  if (real.n_rows() < 3)
    throw Error("experiments", "run_pca needs at least 3 rows");
  if (n_per_instance == 0)
    throw Error("experiments", "n_per_instance must be >= 1");

  const std::size_t n_real = real.n_rows();
  const std::size_t m = real.n_features();
  const StandardizationStats stats = fit_standardization(real);

  Vector background(m, 0.0);
  for (std::size_t i = 0; i < n_real; ++i)
    for (std::size_t j = 0; j < m; ++j) background[j] += real.x(i, j);
  for (auto& v : background) v /= static_cast<double>(n_real);

  const std::size_t n_total = n_real + n_real * n_per_instance;
  Matrix combined(n_total, m, 0.0);
  std::vector<int> is_perturbed(n_total, 0);
  for (std::size_t i = 0; i < n_real; ++i) combined.set_row(i, real.x.row(i));
  std::size_t out = n_real;
  for (std::size_t i = 0; i < n_real; ++i) {
    const std::uint64_t row_seed =
        Rng::derive(seed, "pca/row/" + std::to_string(i));
    const PerturbationBatch pert =
        mode == PerturbMode::kLime
            ? lime_perturb(real.x.row(i), stats, n_per_instance, row_seed)
            : shap_perturb(real.x.row(i), background, n_per_instance, row_seed);
    for (std::size_t k = 0; k < n_per_instance; ++k, ++out) {
      combined.set_row(out, pert.rows.row(k));
      is_perturbed[out] = 1;
    }
  }

  // Standardize by the real-data statistics, then center the combined matrix.
  for (std::size_t j = 0; j < m; ++j) {
    const double sd = stats.stds[j] > 1e-12 ? stats.stds[j] : 1.0;
    for (std::size_t i = 0; i < n_total; ++i)
      combined(i, j) = (combined(i, j) - stats.means[j]) / sd;
  }
  for (std::size_t j = 0; j < m; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n_total; ++i) mean += combined(i, j);
    mean /= static_cast<double>(n_total);
    for (std::size_t i = 0; i < n_total; ++i) combined(i, j) -= mean;
  }

  double total_variance = 0.0;
  for (std::size_t i = 0; i < n_total; ++i)
    for (std::size_t j = 0; j < m; ++j)
      total_variance += combined(i, j) * combined(i, j);
  total_variance /= static_cast<double>(n_total);
  if (total_variance < 1e-12)
    throw Error("experiments",
                "run_pca input has fewer than 2 nonzero principal directions");

  Vector v1 = leading_direction(combined, nullptr);
  const double lambda1 = dot(v1, apply_covariance(combined, v1));
  Vector v2 = leading_direction(combined, &v1);
  {  // re-orthogonalize against v1 for numerical safety
    const double d = dot(v2, v1);
    for (std::size_t j = 0; j < m; ++j) v2[j] -= d * v1[j];
    const double nv = norm2(v2);
    if (nv > 1e-300)
      for (auto& val : v2) val /= nv;
  }
  const double lambda2 = dot(v2, apply_covariance(combined, v2));
  if (lambda2 <= 1e-12 * lambda1 || norm2(v2) < 0.5)
    throw Error("experiments",
                "run_pca input has fewer than 2 nonzero principal directions");
  canonicalize_sign(v1);
  canonicalize_sign(v2);

  PcaProjection proj;
  proj.coords = Matrix(n_total, 2, 0.0);
  for (std::size_t i = 0; i < n_total; ++i) {
    double c1 = 0.0, c2 = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      c1 += combined(i, j) * v1[j];
      c2 += combined(i, j) * v2[j];
    }
    proj.coords(i, 0) = c1;
    proj.coords(i, 1) = c2;
  }
  proj.is_perturbed = std::move(is_perturbed);
  proj.component1 = std::move(v1);
  proj.component2 = std::move(v2);
  proj.ev1 = lambda1 / total_variance;
  proj.ev2 = lambda2 / total_variance;
  return proj;
}

}  // namespace xailab
