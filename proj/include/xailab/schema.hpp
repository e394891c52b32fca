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

#ifndef XAILAB_SCHEMA_HPP_
#define XAILAB_SCHEMA_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace xailab {

enum class FeatureKind { kContinuous, kCategorical };

struct FeatureSpec {
  std::string name;
  FeatureKind kind = FeatureKind::kContinuous;
  // Declared category labels, in integer-code order. Empty for continuous.
  std::vector<std::string> categories;
};

struct FeatureSchema {
  std::vector<FeatureSpec> features;
  std::size_t sensitive_index = 0;
  std::vector<std::size_t> uncorrelated_indices;
  std::string label_name = "label";

  std::size_t n_features() const { return features.size(); }

  // Throws on duplicate names, bad indices, non-disjoint sensitive and
  // uncorrelated sets, or categorical cardinality < 2.
  void validate() const;

  std::size_t index_of(std::string_view name) const;
  bool is_uncorrelated(std::size_t index) const;

  nlohmann::ordered_json to_json() const;
  static FeatureSchema from_json(const nlohmann::ordered_json& j);
};

FeatureSchema load_schema(const std::string& path);
void save_schema(const std::string& path, const FeatureSchema& schema);

}  // namespace xailab

#endif  // XAILAB_SCHEMA_HPP_
