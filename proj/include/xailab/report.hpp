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

#ifndef XAILAB_REPORT_HPP_
#define XAILAB_REPORT_HPP_

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "xailab/experiments.hpp"
#include "xailab/schema.hpp"

namespace xailab {

// Inputs shared by all report writers: the schema resolves feature indices
// to names, sign_policy fills the sidecar column on shlime rows.
struct ReportContext {
  FeatureSchema schema;
  std::string shlime_sign_policy = "signed_product";
};

// Each writer emits the summary CSV for its result type plus the
// per-instance attribution CSV the summary can be recomputed from, all under
// out_dir, and returns the file names it wrote. Output bytes depend only on
// the inputs.
std::vector<std::string> emit_report(const Top3Report& report,
                                     const ReportContext& ctx,
                                     const std::string& out_dir);
std::vector<std::string> emit_report(const SweepResult& result,
                                     const ReportContext& ctx,
                                     const std::string& out_dir);
std::vector<std::string> emit_report(const PcaProjection& projection,
                                     const std::string& out_dir);

// Manifest lifecycle: the harness writes a "running" manifest before any
// work starts, then rewrites it with derived values and the result file list
// once the CSVs exist. `config_echo` must round-trip through the config
// loader so a manifest can be re-run directly.
nlohmann::ordered_json make_run_manifest(
    const nlohmann::ordered_json& config_echo, std::uint64_t seed);
void write_manifest(const nlohmann::ordered_json& manifest,
                    const std::string& out_dir);

}  // namespace xailab

#endif  // XAILAB_REPORT_HPP_
