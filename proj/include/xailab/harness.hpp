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

#ifndef XAILAB_HARNESS_HPP_
#define XAILAB_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "xailab/config.hpp"
#include "xailab/dataset.hpp"
#include "xailab/experiments.hpp"
#include "xailab/ood_detector.hpp"
#include "xailab/scaffold.hpp"

namespace xailab {

// Everything an experiment needs, built deterministically from one config:
// the dataset and split, the biased rule f and the innocuous rule psi, the
// in-distribution detector with its calibration set, the assembled scaffold,
// and the explainer setup sharing the train-mean background.
struct Arena {
  FeatureSchema schema;
  Dataset train;
  Dataset test;
  Vector background;  // per-column train means, raw feature space
  ModelPtr f;
  ModelPtr psi;
  OODDetector detector;
  Dataset calibration;
  ModelPtr scaffold;
  std::size_t psi_index = 0;
  ExplainerSetup setup;
};

Arena build_arena(const ExperimentConfig& config);

// Runs the configured experiment end to end: writes a "running" manifest
// into config.out_dir before any computation, then the result CSVs, then the
// final manifest with derived values and the file list. Returns the files
// written (manifest last).
std::vector<std::string> run_experiment(const ExperimentConfig& config,
                                        std::size_t parallel = 1);

}  // namespace xailab

#endif  // XAILAB_HARNESS_HPP_
