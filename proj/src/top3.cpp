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

#include <algorithm>
#include <string>

#include "xailab/error.hpp"
#include "xailab/rng.hpp"

namespace xailab {

AttributionVector run_explainer(const std::string& tag,
                                const BlackBoxModel& model,
                                const Vector& origin,
                                const ExplainerSetup& setup,
                                std::uint64_t seed) {
  if (tag == "lime") return explain_lime(model, origin, setup.stats, setup.lime, seed);
  if (tag == "shap") return explain_kernel_shap(model, origin, setup.shap, seed);
  if (tag == "shlime") {
    ShlimeConfig config;
    config.lime = setup.lime;
    config.shap = setup.shap;
    config.sign_policy = setup.sign_policy;
    return explain_shlime_basic(model, origin, setup.stats, config, seed);
  }
  throw Error("experiments", "unknown explainer tag: " + tag);
}

namespace {

// Uniform sample of n distinct row indices, by partial Fisher-Yates.
std::vector<std::size_t> sample_rows(std::size_t n_rows, std::size_t n,
                                     Rng& rng) {
  std::vector<std::size_t> idx(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) idx[i] = i;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t pick =
        i + static_cast<std::size_t>(
                rng.uniform_below(static_cast<std::uint64_t>(n_rows - i)));
    std::swap(idx[i], idx[pick]);
  }
  idx.resize(n);
  return idx;
}

}  // namespace

Top3Report run_top3(const std::vector<std::pair<std::string, ModelPtr>>& models,
                    const std::vector<std::string>& explainers,
                    const Dataset& test, const ExplainerSetup& setup,
                    std::size_t n_explain, std::uint64_t seed) {
  test.validate();
  if (n_explain == 0) throw Error("experiments", "n_explain must be >= 1");
  if (n_explain > test.n_rows())
    throw Error("experiments", "n_explain exceeds test rows");

  const std::size_t m = test.n_features();
  const std::size_t top_slots = std::min<std::size_t>(3, m);

  Top3Report report;
  for (const auto& [classifier_tag, model] : models) {
    for (const auto& explainer_tag : explainers) {
      Top3Cell cell;
      cell.classifier_tag = classifier_tag;
      cell.explainer_tag = explainer_tag;
      cell.n_instances = n_explain;
      for (const auto& spec : test.schema.features)
        cell.fractions[spec.name] = 0.0;

      const std::uint64_t cell_seed =
          Rng::derive(seed, "top3/" + classifier_tag + "/" + explainer_tag);
      Rng rng(cell_seed);
      const auto rows = sample_rows(test.n_rows(), n_explain, rng);

      std::vector<AttributionRecord> cell_records;
      try {
        for (std::size_t row : rows) {
          const AttributionVector attr = run_explainer(
              explainer_tag, *model, test.x.row(row), setup,
              Rng::derive(cell_seed, "row/" + std::to_string(row)));
          const auto ranks = rank_features(attr);
          for (std::size_t r = 0; r < top_slots; ++r)
            cell.fractions[test.schema.features[ranks[r]].name] += 1.0;
          cell_records.push_back(
              {row, classifier_tag, explainer_tag, attr});
        }
      } catch (const Error& e) {
        cell.error = e.what();
        cell.fractions.clear();
        cell_records.clear();
      }
      if (cell.error.empty())
        for (auto& [name, count] : cell.fractions)
          count /= static_cast<double>(n_explain);
      report.cells.push_back(std::move(cell));
      report.records.insert(report.records.end(), cell_records.begin(),
                            cell_records.end());
    }
  }
  return report;
}

}  // namespace xailab
