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

#ifndef XAILAB_STANDARDIZE_HPP_
#define XAILAB_STANDARDIZE_HPP_

#include <cstddef>
#include <vector>

#include "xailab/dataset.hpp"
#include "xailab/linalg.hpp"
#include "xailab/rng.hpp"

namespace xailab {

// Per-column statistics in schema order. Means and stds use the population
// (divide-by-n) convention and are computed over raw values for continuous
// columns and integer codes for categorical ones; the code-level moments put
// categoricals on the same scale as everything else in standardized space.
// frequencies[j] is empty for continuous columns, otherwise indexed by code.
struct StandardizationStats {
  std::vector<double> means;
  std::vector<double> stds;
  std::vector<std::vector<double>> frequencies;

  std::size_t n_features() const { return means.size(); }

  // (v - mean) / std per column; a column with zero spread (only possible for
  // categoricals, continuous ones are rejected at fit time) maps to 0.
  double standardize_cell(std::size_t column, double value) const;
  Vector standardize_row(const Vector& row) const;

  // Draws a category code from frequencies[column].
  double sample_category(std::size_t column, Rng& rng) const;
};

// Errors on a constant continuous feature, naming it.
StandardizationStats fit_standardization(const Dataset& data);

}  // namespace xailab

#endif  // XAILAB_STANDARDIZE_HPP_
