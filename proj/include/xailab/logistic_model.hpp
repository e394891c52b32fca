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

#ifndef XAILAB_LOGISTIC_MODEL_HPP_
#define XAILAB_LOGISTIC_MODEL_HPP_

#include "xailab/dataset.hpp"
#include "xailab/model.hpp"

namespace xailab {

struct LogisticHyper {
  double learning_rate = 0.1;
  std::size_t epochs = 500;
  double l2 = 1e-4;
};

// Logistic regression trained by full-batch gradient descent from zero
// weights. Inputs are standardized internally (per-column mean/std from the
// training set, constant columns mapped to 0), so predict_proba takes raw
// rows like every other model.
class LogisticModel : public BlackBoxModel {
 public:
  LogisticModel(Vector weights, double bias, Vector means, Vector stds,
                LogisticHyper hyper, Vector loss_trace);

  std::array<double, 2> predict_proba(const Vector& row) const override;

  const Vector& weights() const { return weights_; }
  double bias() const { return bias_; }
  const Vector& means() const { return means_; }
  const Vector& stds() const { return stds_; }
  const LogisticHyper& hyper() const { return hyper_; }
  // Mean cross-entropy plus L2 term, one entry per epoch starting with the
  // pre-training loss.
  const Vector& loss_trace() const { return loss_trace_; }

 private:
  Vector weights_;
  double bias_;
  Vector means_;
  Vector stds_;
  LogisticHyper hyper_;
  Vector loss_trace_;
};

ModelPtr train_logistic(const Dataset& train, const LogisticHyper& hyper);

}  // namespace xailab

#endif  // XAILAB_LOGISTIC_MODEL_HPP_
