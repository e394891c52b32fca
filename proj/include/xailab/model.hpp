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

#ifndef XAILAB_MODEL_HPP_
#define XAILAB_MODEL_HPP_

#include <array>
#include <memory>

#include "xailab/linalg.hpp"

namespace xailab {

// Opaque prediction interface. Rows use the raw (unstandardized) numeric
// encoding of Dataset. Implementations must be deterministic: repeated calls
// on the same row return the same probabilities.
class BlackBoxModel {
 public:
  virtual ~BlackBoxModel() = default;

  // Probability vector over classes {0, 1}; entries sum to 1.
  virtual std::array<double, 2> predict_proba(const Vector& row) const = 0;

  // Argmax class; exact ties resolve to class 0.
  int predict(const Vector& row) const {
    const auto p = predict_proba(row);
    return p[1] > p[0] ? 1 : 0;
  }

  double proba1(const Vector& row) const { return predict_proba(row)[1]; }
};

using ModelPtr = std::shared_ptr<const BlackBoxModel>;

}  // namespace xailab

#endif  // XAILAB_MODEL_HPP_
