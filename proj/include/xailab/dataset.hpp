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

#ifndef XAILAB_DATASET_HPP_
#define XAILAB_DATASET_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "xailab/linalg.hpp"
#include "xailab/schema.hpp"

namespace xailab {

// Rows are stored numerically: continuous cells hold raw values, categorical
// cells hold the category code (index into FeatureSpec::categories) as a
// double. Labels are 0/1.
struct Dataset {
  FeatureSchema schema;
  Matrix x{0, 0};
  std::vector<int> labels;

  std::size_t n_rows() const { return x.rows; }
  std::size_t n_features() const { return x.cols; }

  // Checks shape consistency, integer in-range categorical cells, finite
  // continuous cells, and 0/1 labels.
  void validate() const;
};

// Shuffles row order by seed, then takes the first floor(n * (1 -
// test_fraction)) rows as train and the rest as test. The two parts are
// disjoint and jointly cover the input multiset of rows.
struct TrainTestSplit {
  Dataset train;
  Dataset test;
};
TrainTestSplit split_dataset(const Dataset& data, double test_fraction,
                             std::uint64_t seed);

// CSV layout: header row with feature names then the label name; categorical
// cells are written as category strings. Errors carry row/column locations.
Dataset load_csv(const std::string& path, const FeatureSchema& schema);
void write_csv(const std::string& path, const Dataset& data);

}  // namespace xailab

#endif  // XAILAB_DATASET_HPP_
