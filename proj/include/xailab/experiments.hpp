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

#ifndef XAILAB_EXPERIMENTS_HPP_
#define XAILAB_EXPERIMENTS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xailab/attribution.hpp"
#include "xailab/dataset.hpp"
#include "xailab/kernel_shap.hpp"
#include "xailab/lime.hpp"
#include "xailab/model.hpp"
#include "xailab/ood_detector.hpp"
#include "xailab/shlime.hpp"
#include "xailab/standardize.hpp"

namespace xailab {

// Shared explainer wiring for one experiment: every tag draws from the same
// standardization statistics and configs so cells differ only by seed.
struct ExplainerSetup {
  StandardizationStats stats;
  LimeConfig lime;
  ShapConfig shap;
  SignPolicy sign_policy = SignPolicy::kSignedProduct;
};

// Dispatches "lime" | "shap" | "shlime". Unknown tags are an error.
AttributionVector run_explainer(const std::string& tag,
                                const BlackBoxModel& model,
                                const Vector& origin,
                                const ExplainerSetup& setup,
                                std::uint64_t seed);

// One explained instance, kept so every report fraction can be recomputed
// from the per-instance records alone.
struct AttributionRecord {
  std::size_t instance_id = 0;  // row index into the test set
  std::string classifier_tag;
  std::string explainer_tag;
  AttributionVector attribution;
};

struct Top3Cell {
  std::string classifier_tag;
  std::string explainer_tag;
  std::map<std::string, double> fractions;  // feature name -> top-3 fraction
  std::size_t n_instances = 0;
  std::string error;  // non-empty marks an aborted cell
};

struct Top3Report {
  std::vector<Top3Cell> cells;
  std::vector<AttributionRecord> records;
};

// Explains n_explain uniformly sampled test rows per (model, explainer) pair
// and tallies how often each feature lands in the top three by |weight|.
// Explainer failures abort only their own cell.
Top3Report run_top3(const std::vector<std::pair<std::string, ModelPtr>>& models,
                    const std::vector<std::string>& explainers,
                    const Dataset& test, const ExplainerSetup& setup,
                    std::size_t n_explain, std::uint64_t seed);

// The pieces run_sensitivity_sweep needs to rebuild a scaffold per F1 level:
// the deployed model, the innocuous stand-in, the undegraded detector, and
// the labeled eval set degradation is calibrated against.
struct SweepArena {
  ModelPtr f;
  ModelPtr psi;
  OODDetector detector;
  Dataset calibration;
};

struct SweepCell {
  double f1_target = 0.0;
  double f1_achieved = 0.0;
  std::string explainer_tag;
  double detection_rate = 0.0;  // sensitive feature at rank-1
  std::size_t n_instances = 0;
  std::string error;  // non-empty marks an unachievable level or aborted cell
};

struct SweepResult {
  std::vector<SweepCell> cells;
  std::vector<AttributionRecord> records;
};

// For each (target, explainer) cell: degrade the detector to the target F1,
// rebuild the scaffold, explain n_explain sampled rows, and record the rate
// at which the sensitive feature ranks first. Cells are independent; parallel
// bounds how many run concurrently. Output order and content do not depend
// on parallel.
SweepResult run_sensitivity_sweep(const std::vector<double>& f1_targets,
                                  const std::vector<std::string>& explainers,
                                  const SweepArena& arena, const Dataset& test,
                                  const ExplainerSetup& setup,
                                  std::size_t n_explain, std::uint64_t seed,
                                  double tolerance = 0.02,
                                  std::size_t parallel = 1);

struct PcaProjection {
  Matrix coords{0, 2};            // one row per input point
  std::vector<int> is_perturbed;  // 0 = real row, 1 = perturbation
  Vector component1;              // orthonormal directions in standardized space
  Vector component2;
  double ev1 = 0.0;  // explained-variance fractions, ev1 >= ev2
  double ev2 = 0.0;
};

// Standardizes the real rows, appends n_per_instance perturbations per row in
// the given mode, mean-centers the combined matrix, and projects everything
// onto the top two principal components found by power iteration with
// deflation.
PcaProjection run_pca(const Dataset& real, PerturbMode mode,
                      std::size_t n_per_instance, std::uint64_t seed);

}  // namespace xailab

#endif  // XAILAB_EXPERIMENTS_HPP_
