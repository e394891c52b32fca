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

#include <atomic>
#include <thread>
#include <utility>

#include "xailab/error.hpp"
#include "xailab/rng.hpp"
#include "xailab/scaffold.hpp"
#include "xailab/textio.hpp"

namespace xailab {

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

SweepResult run_sensitivity_sweep(const std::vector<double>& f1_targets,
                                  const std::vector<std::string>& explainers,
                                  const SweepArena& arena, const Dataset& test,
                                  const ExplainerSetup& setup,
                                  std::size_t n_explain, std::uint64_t seed,
                                  double tolerance, std::size_t parallel) {
  test.validate();
  if (f1_targets.empty()) throw Error("experiments", "f1_targets is empty");
  for (std::size_t i = 1; i < f1_targets.size(); ++i)
    if (f1_targets[i] <= f1_targets[i - 1])
      throw Error("experiments", "f1_targets must be strictly ascending");
  if (explainers.empty()) throw Error("experiments", "no explainer tags");
  if (n_explain == 0) throw Error("experiments", "n_explain must be >= 1");
  if (n_explain > test.n_rows())
    throw Error("experiments", "n_explain exceeds test rows");
  if (parallel == 0) parallel = 1;

  const std::size_t sens = test.schema.sensitive_index;
  const std::size_t n_cells = f1_targets.size() * explainers.size();
  std::vector<SweepCell> cells(n_cells);
  std::vector<std::vector<AttributionRecord>> records(n_cells);

  auto run_cell = [&](std::size_t cell_index) {
    const double target = f1_targets[cell_index / explainers.size()];
    const std::string& tag = explainers[cell_index % explainers.size()];
    SweepCell& cell = cells[cell_index];
    cell.f1_target = target;
    cell.explainer_tag = tag;
    cell.n_instances = n_explain;
    try {
      // One degradation per target level: both explainers at a level attack
      // the same scaffold, as the level's flip noise is seeded by the target.
      const OODDetector degraded = degrade_detector(
          arena.detector, target, arena.calibration, tolerance,
          Rng::derive(seed, "degrade/" + format_double(target)));
      cell.f1_achieved = degraded.measured_f1();
      const ModelPtr scaffold = build_scaffold(arena.f, arena.psi, degraded);
      const std::string classifier_tag =
          "scaffold_f1_" + format_double(target);

      const std::uint64_t cell_seed =
          Rng::derive(seed, "sweep/" + format_double(target) + "/" + tag);
      Rng rng(cell_seed);
      const auto rows = sample_rows(test.n_rows(), n_explain, rng);
      std::size_t hits = 0;
      for (std::size_t row : rows) {
        const AttributionVector attr = run_explainer(
            tag, *scaffold, test.x.row(row), setup,
            Rng::derive(cell_seed, "row/" + std::to_string(row)));
        if (rank_features(attr)[0] == sens) hits++;
        records[cell_index].push_back({row, classifier_tag, tag, attr});
      }
      cell.detection_rate =
          static_cast<double>(hits) / static_cast<double>(n_explain);
    } catch (const std::exception& e) {
      cell.error = e.what();
      records[cell_index].clear();
    }
  };

  if (parallel == 1) {
    for (std::size_t c = 0; c < n_cells; ++c) run_cell(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const std::size_t n_workers = std::min(parallel, n_cells);
    workers.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w)
      workers.emplace_back([&] {
        for (std::size_t c = next.fetch_add(1); c < n_cells;
             c = next.fetch_add(1))
          run_cell(c);
      });
    for (auto& t : workers) t.join();
  }

  SweepResult result;
  result.cells = std::move(cells);
  for (auto& cell_records : records)
    result.records.insert(result.records.end(), cell_records.begin(),
                          cell_records.end());
  return result;
}

}  // namespace xailab
