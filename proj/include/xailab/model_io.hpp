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

#ifndef XAILAB_MODEL_IO_HPP_
#define XAILAB_MODEL_IO_HPP_

#include <string>

#include "xailab/model.hpp"

namespace xailab {

// Serializes rule, logistic, and forest models to a JSON document carrying a
// format_version field; load rejects unknown versions and model types.
void save_model(const std::string& path, const BlackBoxModel& model);
ModelPtr load_model(const std::string& path);

// "rule", "logistic", "forest", or "scaffold"; "opaque" for anything else.
std::string model_type_name(const BlackBoxModel& model);

}  // namespace xailab

#endif  // XAILAB_MODEL_IO_HPP_
