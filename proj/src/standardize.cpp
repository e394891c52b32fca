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

#include "xailab/standardize.hpp"

#include <cmath>

#include "xailab/error.hpp"

namespace xailab {

double StandardizationStats::standardize_cell(std::size_t column,
                                              double value) const {
  const double s = stds[column];
  if (s == 0.0) return 0.0;
  return (value - means[column]) / s;
}

Vector StandardizationStats::standardize_row(const Vector& row) const {
  if (row.size() != means.size())
    throw Error("core", "row width does not match standardization stats");
  Vector out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    out[j] = standardize_cell(j, row[j]);
  return out;
}

double StandardizationStats::sample_category(std::size_t column,
                                             Rng& rng) const {
  const auto& freq = frequencies[column];
  if (freq.empty())
    throw Error("core", "sample_category on a continuous column");
  const double u = rng.uniform01();
  double cum = 0.0;
  for (std::size_t c = 0; c < freq.size(); ++c) {
    cum += freq[c];
    if (u < cum) return static_cast<double>(c);
  }
  return static_cast<double>(freq.size() - 1);
}

StandardizationStats fit_standardization(const Dataset& data) {
  data.validate();
  const std::size_t n = data.n_rows();
  const std::size_t m = data.n_features();
  StandardizationStats stats;
  stats.means.assign(m, 0.0);
  stats.stds.assign(m, 0.0);
  stats.frequencies.assign(m, {});

  for (std::size_t j = 0; j < m; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += data.x(i, j);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = data.x(i, j) - mean;
      var += d * d;
    }
    var /= static_cast<double>(n);
    stats.means[j] = mean;
    stats.stds[j] = std::sqrt(var);

    const auto& f = data.schema.features[j];
    if (f.kind == FeatureKind::kContinuous) {
      if (stats.stds[j] == 0.0)
        throw Error("core", "constant continuous feature: " + f.name);
    } else {
      std::vector<double> freq(f.categories.size(), 0.0);
      for (std::size_t i = 0; i < n; ++i)
        freq[static_cast<std::size_t>(data.x(i, j))] += 1.0;
      for (double& v : freq) v /= static_cast<double>(n);
      stats.frequencies[j] = std::move(freq);
    }
  }
  return stats;
}

}  // namespace xailab
