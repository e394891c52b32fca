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

#include "xailab/metrics.hpp"

#include "xailab/error.hpp"

namespace xailab {

ClassificationMetrics compute_metrics(const std::vector<int>& predicted,
                                      const std::vector<int>& actual) {
  if (predicted.empty())
    throw Error("models", "cannot compute metrics on empty input");
  if (predicted.size() != actual.size())
    throw Error("models", "prediction/label count mismatch");
  std::size_t tp = 0, fp = 0, fn = 0, correct = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] == actual[i]) ++correct;
    if (predicted[i] == 1 && actual[i] == 1) ++tp;
    if (predicted[i] == 1 && actual[i] == 0) ++fp;
    if (predicted[i] == 0 && actual[i] == 1) ++fn;
  }
  ClassificationMetrics m;
  m.accuracy =
      static_cast<double>(correct) / static_cast<double>(predicted.size());
  m.precision =
      tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp)
                  : 0.0;
  m.recall = tp + fn > 0
                 ? static_cast<double>(tp) / static_cast<double>(tp + fn)
                 : 0.0;
  m.f1 = m.precision + m.recall > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

ClassificationMetrics evaluate(const BlackBoxModel& model,
                               const Dataset& data) {
  if (data.n_rows() == 0)
    throw Error("models", "cannot evaluate on an empty dataset");
  std::vector<int> predicted(data.n_rows());
  for (std::size_t i = 0; i < data.n_rows(); ++i)
    predicted[i] = model.predict(data.x.row(i));
  return compute_metrics(predicted, data.labels);
}

}  // namespace xailab
