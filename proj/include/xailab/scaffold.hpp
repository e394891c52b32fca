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

#ifndef XAILAB_SCAFFOLD_HPP_
#define XAILAB_SCAFFOLD_HPP_

#include <nlohmann/json.hpp>

#include "xailab/dataset.hpp"
#include "xailab/model.hpp"
#include "xailab/ood_detector.hpp"

namespace xailab {

// Case-split classifier: answers with f on rows the detector deems
// in-distribution and with psi on everything else.
class ScaffoldModel : public BlackBoxModel {
 public:
  ScaffoldModel(ModelPtr f, ModelPtr psi, OODDetector detector);

  std::array<double, 2> predict_proba(const Vector& row) const override;

  const ModelPtr& inner_f() const { return f_; }
  const ModelPtr& inner_psi() const { return psi_; }
  const OODDetector& detector() const { return detector_; }

 private:
  ModelPtr f_;
  ModelPtr psi_;
  OODDetector detector_;
};

ModelPtr build_scaffold(ModelPtr f, ModelPtr psi, OODDetector detector);

// Fraction of rows where e and f agree on the predicted class.
double fidelity(const BlackBoxModel& e, const BlackBoxModel& f,
                const Dataset& x);

// Everything needed to reconstruct the scaffold: model kinds, detector
// learner, measured F1, flip rate, noise seed, threshold.
nlohmann::ordered_json describe_scaffold(const ScaffoldModel& scaffold);

}  // namespace xailab

#endif  // XAILAB_SCAFFOLD_HPP_
