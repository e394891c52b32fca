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

#include "xailab/report.hpp"

#include <ctime>
#include <filesystem>
#include <string>

#include "xailab/attribution.hpp"
#include "xailab/textio.hpp"
#include "xailab/version.hpp"

namespace xailab {

namespace {

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string join_path(const std::string& out_dir, const std::string& name) {
  return (std::filesystem::path(out_dir) / name).string();
}

// One row per attribution term, rank order, intercept first with an empty
// rank cell. Summary fractions are tallies over these rows.
std::string render_attributions(const std::vector<AttributionRecord>& records,
                                const ReportContext& ctx) {
  std::string out =
      "instance_id,classifier_tag,explainer_tag,sign_policy,feature_name,"
      "rank,phi\n";
  for (const auto& rec : records) {
    const std::string policy =
        rec.explainer_tag == "shlime" ? ctx.shlime_sign_policy : "";
    const std::string prefix = std::to_string(rec.instance_id) + "," +
                               csv_field(rec.classifier_tag) + "," +
                               csv_field(rec.explainer_tag) + "," + policy +
                               ",";
    out += prefix + "(intercept),," + format_double(rec.attribution.intercept) +
           "\n";
    const auto order = rank_features(rec.attribution);
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      const std::size_t j = order[rank];
      out += prefix + csv_field(ctx.schema.features[j].name) + "," +
             std::to_string(rank) + "," +
             format_double(rec.attribution.weights[j]) + "\n";
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> emit_report(const Top3Report& report,
                                     const ReportContext& ctx,
                                     const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::string out = "classifier_tag,explainer_tag,feature_name,top3_fraction\n";
  for (const auto& cell : report.cells) {
    if (!cell.error.empty()) continue;
    for (const auto& [name, fraction] : cell.fractions)
      out += csv_field(cell.classifier_tag) + "," +
             csv_field(cell.explainer_tag) + "," + csv_field(name) + "," +
             format_double(fraction) + "\n";
  }
  write_text_file(join_path(out_dir, "top3.csv"), out);
  write_text_file(join_path(out_dir, "attributions.csv"),
                  render_attributions(report.records, ctx));
  return {"top3.csv", "attributions.csv"};
}

std::vector<std::string> emit_report(const SweepResult& result,
                                     const ReportContext& ctx,
                                     const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::string out =
      "f1_target,f1_achieved,explainer_tag,detection_rate,n_instances\n";
  for (const auto& cell : result.cells) {
    if (!cell.error.empty()) continue;
    out += format_double(cell.f1_target) + "," +
           format_double(cell.f1_achieved) + "," +
           csv_field(cell.explainer_tag) + "," +
           format_double(cell.detection_rate) + "," +
           std::to_string(cell.n_instances) + "\n";
  }
  write_text_file(join_path(out_dir, "sweep.csv"), out);
  write_text_file(join_path(out_dir, "attributions.csv"),
                  render_attributions(result.records, ctx));
  return {"sweep.csv", "attributions.csv"};
}

std::vector<std::string> emit_report(const PcaProjection& projection,
                                     const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::string out = "point_id,pc1,pc2,label\n";
  for (std::size_t i = 0; i < projection.coords.rows; ++i)
    out += std::to_string(i) + "," + format_double(projection.coords(i, 0)) +
           "," + format_double(projection.coords(i, 1)) + "," +
           (projection.is_perturbed[i] ? "perturbed" : "real") + "\n";
  write_text_file(join_path(out_dir, "pca.csv"), out);
  write_text_file(join_path(out_dir, "pca_meta.csv"),
                  "ev1,ev2\n" + format_double(projection.ev1) + "," +
                      format_double(projection.ev2) + "\n");
  return {"pca.csv", "pca_meta.csv"};
}

nlohmann::ordered_json make_run_manifest(
    const nlohmann::ordered_json& config_echo, std::uint64_t seed) {
  nlohmann::ordered_json manifest;
  manifest["artifact"] = "xailab";
  manifest["version"] = kVersion;
  std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ",
                std::gmtime(&now));
  manifest["created_utc"] = stamp;
  manifest["status"] = "running";
  manifest["seed"] = seed;
  manifest["config"] = config_echo;
  return manifest;
}

void write_manifest(const nlohmann::ordered_json& manifest,
                    const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_text_file(join_path(out_dir, "manifest.json"), manifest.dump(2) + "\n");
}

}  // namespace xailab
