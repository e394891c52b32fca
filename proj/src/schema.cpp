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

#include "xailab/schema.hpp"

#include <algorithm>
#include <unordered_set>

#include "xailab/error.hpp"
#include "xailab/textio.hpp"

namespace xailab {

void FeatureSchema::validate() const {
  if (features.empty()) throw Error("core", "schema declares no features");
  std::unordered_set<std::string> names;
  for (const auto& f : features) {
    if (f.name.empty()) throw Error("core", "empty feature name");
    if (!names.insert(f.name).second)
      throw Error("core", "duplicate feature name: " + f.name);
    if (f.kind == FeatureKind::kCategorical && f.categories.size() < 2)
      throw Error("core",
                  "categorical feature '" + f.name + "' needs >= 2 categories");
    if (f.kind == FeatureKind::kContinuous && !f.categories.empty())
      throw Error("core",
                  "continuous feature '" + f.name + "' declares categories");
  }
  if (label_name.empty()) throw Error("core", "empty label name");
  if (names.count(label_name))
    throw Error("core", "label name collides with feature: " + label_name);
  if (sensitive_index >= features.size())
    throw Error("core", "sensitive feature index out of range");
  std::unordered_set<std::size_t> uncorr;
  for (std::size_t idx : uncorrelated_indices) {
    if (idx >= features.size())
      throw Error("core", "uncorrelated feature index out of range");
    if (idx == sensitive_index)
      throw Error("core", "sensitive feature also declared uncorrelated");
    if (!uncorr.insert(idx).second)
      throw Error("core", "duplicate uncorrelated feature index");
  }
}

std::size_t FeatureSchema::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < features.size(); ++i)
    if (features[i].name == name) return i;
  throw Error("core", "unknown feature: " + std::string(name));
}

bool FeatureSchema::is_uncorrelated(std::size_t index) const {
  return std::find(uncorrelated_indices.begin(), uncorrelated_indices.end(),
                   index) != uncorrelated_indices.end();
}

nlohmann::ordered_json FeatureSchema::to_json() const {
  nlohmann::ordered_json j;
  j["features"] = nlohmann::ordered_json::array();
  for (const auto& f : features) {
    nlohmann::ordered_json jf;
    jf["name"] = f.name;
    jf["kind"] = f.kind == FeatureKind::kContinuous ? "continuous" : "categorical";
    if (f.kind == FeatureKind::kCategorical) jf["categories"] = f.categories;
    j["features"].push_back(jf);
  }
  j["sensitive"] = features[sensitive_index].name;
  nlohmann::ordered_json ju = nlohmann::ordered_json::array();
  for (std::size_t idx : uncorrelated_indices) ju.push_back(features[idx].name);
  j["uncorrelated"] = ju;
  j["label"] = label_name;
  return j;
}

FeatureSchema FeatureSchema::from_json(const nlohmann::ordered_json& j) {
  FeatureSchema s;
  if (!j.contains("features") || !j["features"].is_array())
    throw Error("core", "schema file: missing 'features' array");
  for (const auto& jf : j["features"]) {
    FeatureSpec f;
    if (!jf.contains("name")) throw Error("core", "schema file: feature without 'name'");
    f.name = jf["name"].get<std::string>();
    const std::string kind = jf.value("kind", std::string("continuous"));
    if (kind == "continuous") {
      f.kind = FeatureKind::kContinuous;
    } else if (kind == "categorical") {
      f.kind = FeatureKind::kCategorical;
      if (!jf.contains("categories"))
        throw Error("core", "schema file: categorical feature '" + f.name +
                                "' without 'categories'");
      f.categories = jf["categories"].get<std::vector<std::string>>();
    } else {
      throw Error("core", "schema file: unknown kind '" + kind + "'");
    }
    s.features.push_back(std::move(f));
  }
  if (!j.contains("label")) throw Error("core", "schema file: missing 'label'");
  s.label_name = j["label"].get<std::string>();
  if (!j.contains("sensitive"))
    throw Error("core", "schema file: missing 'sensitive'");
  s.sensitive_index = s.index_of(j["sensitive"].get<std::string>());
  if (j.contains("uncorrelated"))
    for (const auto& name : j["uncorrelated"])
      s.uncorrelated_indices.push_back(s.index_of(name.get<std::string>()));
  s.validate();
  return s;
}

FeatureSchema load_schema(const std::string& path) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("core", "schema file " + path + ": " + e.what());
  }
  return FeatureSchema::from_json(j);
}

void save_schema(const std::string& path, const FeatureSchema& schema) {
  write_text_file(path, schema.to_json().dump(2) + "\n");
}

}  // namespace xailab
