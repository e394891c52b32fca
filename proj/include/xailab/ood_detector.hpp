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

#ifndef XAILAB_OOD_DETECTOR_HPP_
#define XAILAB_OOD_DETECTOR_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "xailab/dataset.hpp"
#include "xailab/forest_model.hpp"
#include "xailab/logistic_model.hpp"
#include "xailab/model.hpp"
#include "xailab/perturb.hpp"

namespace xailab {

// Flags rows that look like explainer perturbations rather than real data.
// is_ood thresholds the underlying model at tau, then optionally flips the
// decision with probability rho_flip using a coin keyed on the row content
// hash and the noise seed, so repeated queries on one row always agree.
class OODDetector {
 public:
  OODDetector(ModelPtr model, double tau, double measured_f1,
              std::string learner_name, double rho_flip = 0.0,
              std::uint64_t noise_seed = 0);

  bool is_ood(const Vector& row) const;
  double proba(const Vector& row) const { return model_->proba1(row); }

  const ModelPtr& model() const { return model_; }
  double tau() const { return tau_; }
  // F1 from the most recent measurement: the training holdout for freshly
  // trained detectors, the calibration eval set after degradation.
  double measured_f1() const { return measured_f1_; }
  const std::string& learner_name() const { return learner_name_; }
  double rho_flip() const { return rho_flip_; }
  std::uint64_t noise_seed() const { return noise_seed_; }

 private:
  ModelPtr model_;
  double tau_;
  double measured_f1_;
  std::string learner_name_;
  double rho_flip_;
  std::uint64_t noise_seed_;
};

enum class DetectorLearner { kForest, kLogistic };

struct DetectorHyper {
  std::size_t n_per_instance = 5;
  double holdout_fraction = 0.25;
  ForestHyper forest{300, 12, 0, 0};  // seed field is replaced by derivation
  LogisticHyper logistic{};
  double tau = 0.5;
  // Coalition-mode background; empty falls back to the per-column mean of the
  // training rows. Must match the background the attacked explainer uses.
  std::optional<Vector> background;
};

// Builds the labeled real-vs-perturbed set for the given mode, holds out a
// fraction for measurement, trains the chosen learner on the rest, and
// attaches the holdout F1.
OODDetector train_ood_detector(const Dataset& x, PerturbMode mode,
                               DetectorLearner learner,
                               const DetectorHyper& hyper, std::uint64_t seed);

// F1 of the detector's is_ood decisions against eval labels (1 = OOD).
double detector_f1(const OODDetector& detector, const Dataset& eval);

// Calibrates flip-rate noise by bisection on [0, 0.5] until the measured F1
// on eval lands within tolerance of target_f1. The input detector must reach
// target_f1 undegraded.
OODDetector degrade_detector(const OODDetector& detector, double target_f1,
                             const Dataset& eval, double tolerance,
                             std::uint64_t seed);

}  // namespace xailab

#endif  // XAILAB_OOD_DETECTOR_HPP_
