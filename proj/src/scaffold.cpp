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

#include "xailab/scaffold.hpp"

#include <utility>

#include "xailab/error.hpp"
#include "xailab/model_io.hpp"

namespace xailab {

ScaffoldModel::ScaffoldModel(ModelPtr f, ModelPtr psi, OODDetector detector)
    : f_(std::move(f)), psi_(std::move(psi)), detector_(std::move(detector)) {
  if (!f_ || !psi_)
    throw Error("adversarial", "scaffold needs both inner models");
}

std::array<double, 2> ScaffoldModel::predict_proba(const Vector& row) const {
  return detector_.is_ood(row) ? psi_->predict_proba(row)
                               : f_->predict_proba(row);
}

ModelPtr build_scaffold(ModelPtr f, ModelPtr psi, OODDetector detector) {
  return std::make_shared<ScaffoldModel>(std::move(f), std::move(psi),
                                         std::move(detector));
}

double fidelity(const BlackBoxModel& e, const BlackBoxModel& f,
                const Dataset& x) {
  if (x.n_rows() == 0)
    throw Error("adversarial", "fidelity needs a non-empty dataset");
  std::size_t agree = 0;
  for (std::size_t i = 0; i < x.n_rows(); ++i) {
    const Vector row = x.x.row(i);
    if (e.predict(row) == f.predict(row)) ++agree;
  }
  return static_cast<double>(agree) / static_cast<double>(x.n_rows());
}

nlohmann::ordered_json describe_scaffold(const ScaffoldModel& scaffold) {
  nlohmann::ordered_json j;
  j["f"] = model_type_name(*scaffold.inner_f());
  j["psi"] = model_type_name(*scaffold.inner_psi());
  j["detector_learner"] = scaffold.detector().learner_name();
  j["detector_f1"] = scaffold.detector().measured_f1();
  j["tau"] = scaffold.detector().tau();
  j["rho_flip"] = scaffold.detector().rho_flip();
  j["noise_seed"] = scaffold.detector().noise_seed();
  return j;
}

}  // namespace xailab
