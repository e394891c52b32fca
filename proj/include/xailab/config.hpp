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

#ifndef XAILAB_CONFIG_HPP_
#define XAILAB_CONFIG_HPP_

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "xailab/kernel_shap.hpp"
#include "xailab/lime.hpp"
#include "xailab/ood_detector.hpp"
#include "xailab/perturb.hpp"
#include "xailab/shlime.hpp"

namespace xailab {

struct SyntheticSpec {
  std::size_t rows = 0;
  std::size_t noise_features = 8;
  double bias = 0.9;
  std::size_t uncorrelated = 2;
};

struct CsvSpec {
  std::string data_path;
  std::string schema_path;
};

struct ModelsSpec {
  std::string psi_uncorrelated_feature;  // empty = first uncorrelated column
  double psi_confidence = 0.65;
};

struct DetectorSpec {
  PerturbMode mode = PerturbMode::kLime;
  DetectorLearner learner = DetectorLearner::kForest;
  DetectorHyper hyper;
};

struct ExplainerSpec {
  LimeConfig lime;
  ShapConfig shap;  // background is filled by the harness, not the config
  SignPolicy shlime_sign_policy = SignPolicy::kSignedProduct;
};

struct Top3Spec {
  std::size_t n_explain = 100;
  std::vector<std::string> explainers{"lime", "shap"};
};

struct SweepSpec {
  std::vector<double> f1_targets;
  std::vector<std::string> explainers;
  std::size_t n_explain = 100;
  double tolerance = 0.02;
};

struct PcaSpec {
  PerturbMode mode = PerturbMode::kLime;
  std::size_t n_per_instance = 10;
  std::size_t rows = 200;  // real rows taken from the test split; 0 = all
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::string out_dir;
  std::optional<SyntheticSpec> synthetic;
  std::optional<CsvSpec> csv;
  double test_fraction = 0.2;
  ModelsSpec models;
  DetectorSpec detector;
  ExplainerSpec explainers;
  std::string kind;  // "top3" | "sweep" | "pca"
  Top3Spec top3;
  SweepSpec sweep;
  PcaSpec pca;
};

// Parses and validates; throws ConfigError naming the offending field path.
// Accepts either a bare config object or an emitted run manifest (the config
// is then read from its "config" key).
ExperimentConfig parse_experiment_config(const nlohmann::ordered_json& root);

// File variant; applies the XAILAB_SEED environment override when set.
ExperimentConfig load_experiment_config(const std::string& path);

// Full echo with defaults resolved; parses back to an equivalent config.
nlohmann::ordered_json config_to_json(const ExperimentConfig& config);

}  // namespace xailab

#endif  // XAILAB_CONFIG_HPP_
