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

#include "xailab/perturb.hpp"

#include <string>
#include <unordered_map>
#include <utility>

#include "xailab/error.hpp"
#include "xailab/rng.hpp"

namespace xailab {

namespace {

std::uint64_t hash_row(const Vector& row) {
  return fnv1a64(row.data(), row.size() * sizeof(double));
}

}  // namespace

PerturbationBatch lime_perturb(const Vector& origin,
                               const StandardizationStats& stats,
                               std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error("perturb", "lime_perturb needs n >= 1");
  if (origin.size() != stats.n_features())
    throw Error("perturb", "origin width does not match stats");

  PerturbationBatch batch;
  batch.origin = origin;
  batch.seed = seed;
  batch.rows = Matrix(n, origin.size());

  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < origin.size(); ++j) {
      if (stats.frequencies[j].empty()) {
        batch.rows(i, j) = origin[j] + rng.normal() * stats.stds[j];
      } else if (rng.uniform01() < 0.5) {
        batch.rows(i, j) = stats.sample_category(j, rng);
      } else {
        batch.rows(i, j) = origin[j];
      }
    }
  }
  return batch;
}

Vector apply_mask(const CoalitionMask& mask, const Vector& origin,
                  const Vector& background) {
  if (mask.size() != origin.size() || origin.size() != background.size())
    throw Error("perturb", "mask/origin/background width mismatch");
  Vector row(origin.size());
  for (std::size_t j = 0; j < origin.size(); ++j)
    row[j] = mask[j] ? origin[j] : background[j];
  return row;
}

PerturbationBatch shap_perturb(const Vector& origin, const Vector& background,
                               std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error("perturb", "shap_perturb needs n >= 1");
  if (origin.size() != background.size())
    throw Error("perturb", "origin/background width mismatch");
  const std::size_t m = origin.size();
  if (m < 2) throw Error("perturb", "coalition sampling needs >= 2 features");

  PerturbationBatch batch;
  batch.origin = origin;
  batch.seed = seed;
  batch.rows = Matrix(n, m);
  batch.masks.resize(n);

  Rng rng(seed);
  std::vector<std::size_t> pool(m);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t s =
        1 + static_cast<std::size_t>(
                rng.uniform_below(static_cast<std::uint64_t>(m - 1)));
    for (std::size_t j = 0; j < m; ++j) pool[j] = j;
    CoalitionMask mask(m, 0);
    for (std::size_t k = 0; k < s; ++k) {
      const std::size_t pick =
          k + static_cast<std::size_t>(
                  rng.uniform_below(static_cast<std::uint64_t>(m - k)));
      std::swap(pool[k], pool[pick]);
      mask[pool[k]] = 1;
    }
    batch.rows.set_row(i, apply_mask(mask, origin, background));
    batch.masks[i] = std::move(mask);
  }
  return batch;
}

Dataset build_ood_training_set(const Dataset& x, PerturbMode mode,
                               std::size_t n_per_instance, std::uint64_t seed,
                               const std::optional<Vector>& background) {
  x.validate();
  if (x.n_rows() == 0) throw Error("perturb", "empty dataset");
  const std::size_t n = x.n_rows();
  const std::size_t m = x.n_features();

  StandardizationStats stats;
  Vector bg;
  if (mode == PerturbMode::kLime) {
    stats = fit_standardization(x);
  } else {
    if (background) {
      bg = *background;
      if (bg.size() != m)
        throw Error("perturb", "background width does not match dataset");
    } else {
      bg.assign(m, 0.0);
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) bg[j] += x.x(i, j);
        bg[j] /= static_cast<double>(n);
      }
    }
  }

  // Exact-equality membership test against the real rows: hash buckets hold
  // candidate row indices, equality is confirmed cell-for-cell.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> real_rows;
  for (std::size_t i = 0; i < n; ++i)
    real_rows[hash_row(x.x.row(i))].push_back(i);
  auto overlaps_real = [&](const Vector& row) {
    const auto it = real_rows.find(hash_row(row));
    if (it == real_rows.end()) return false;
    for (std::size_t i : it->second)
      if (x.x.row(i) == row) return true;
    return false;
  };

  const std::size_t total = n + n * n_per_instance;
  Matrix rows(total, m);
  std::vector<int> labels(total);
  std::size_t out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    rows.set_row(out, x.x.row(i));
    labels[out++] = 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (n_per_instance == 0) break;
    const std::uint64_t row_seed =
        Rng::derive(seed, "ood-row/" + std::to_string(i));
    const PerturbationBatch batch =
        mode == PerturbMode::kLime
            ? lime_perturb(x.x.row(i), stats, n_per_instance, row_seed)
            : shap_perturb(x.x.row(i), bg, n_per_instance, row_seed);
    for (std::size_t k = 0; k < n_per_instance; ++k) {
      const Vector row = batch.rows.row(k);
      rows.set_row(out, row);
      labels[out++] = overlaps_real(row) ? 0 : 1;
    }
  }

  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = i;
  Rng shuffle_rng(Rng::derive(seed, "ood-shuffle"));
  for (std::size_t i = total; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(
        shuffle_rng.uniform_below(static_cast<std::uint64_t>(i)));
    std::swap(order[i - 1], order[j]);
  }

  Dataset result;
  for (const auto& f : x.schema.features)
    result.schema.features.push_back({f.name, FeatureKind::kContinuous, {}});
  result.schema.sensitive_index = x.schema.sensitive_index;
  result.schema.uncorrelated_indices = x.schema.uncorrelated_indices;
  result.schema.label_name = "is_ood";
  result.x = Matrix(total, m);
  result.labels.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    result.x.set_row(i, rows.row(order[i]));
    result.labels[i] = labels[order[i]];
  }
  return result;
}

}  // namespace xailab
