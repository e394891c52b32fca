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

#ifndef XAILAB_METRICS_HPP_
#define XAILAB_METRICS_HPP_

#include "xailab/dataset.hpp"
#include "xailab/model.hpp"

namespace xailab {

// Class 1 is the positive class. Precision/recall/f1 fall back to 0 when
// their denominators vanish.
struct ClassificationMetrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

ClassificationMetrics compute_metrics(const std::vector<int>& predicted,
                                      const std::vector<int>& actual);

ClassificationMetrics evaluate(const BlackBoxModel& model,
                               const Dataset& data);

}  // namespace xailab

#endif  // XAILAB_METRICS_HPP_
