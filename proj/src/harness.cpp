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

#include "xailab/harness.hpp"

#include <algorithm>
#include <ctime>
#include <string>
#include <utility>

#include "xailab/error.hpp"
#include "xailab/perturb.hpp"
#include "xailab/report.hpp"
#include "xailab/rng.hpp"
#include "xailab/rule_model.hpp"
#include "xailab/synthetic.hpp"
#include "xailab/textio.hpp"

namespace xailab {

namespace {

Dataset load_configured_dataset(const ExperimentConfig& config) {
  if (config.synthetic) {
    SyntheticConfig synth;
    synth.n_rows = config.synthetic->rows;
    synth.n_noise_features = config.synthetic->noise_features;
    synth.bias_strength = config.synthetic->bias;
    synth.n_uncorrelated = config.synthetic->uncorrelated;
    synth.seed = Rng::derive(config.seed, "data");
    return generate_synthetic(synth);
  }
  const FeatureSchema schema = load_schema(config.csv->schema_path);
  return load_csv(config.csv->data_path, schema);
}

std::size_t resolve_psi_index(const FeatureSchema& schema,
                              const ModelsSpec& models) {
  if (models.psi_uncorrelated_feature.empty()) {
    if (schema.uncorrelated_indices.empty())
      throw ConfigError(
          "models.psi_uncorrelated_feature: schema declares no uncorrelated "
          "features");
    return schema.uncorrelated_indices.front();
  }
  for (std::size_t j = 0; j < schema.n_features(); ++j) {
    if (schema.features[j].name != models.psi_uncorrelated_feature) continue;
    if (!schema.is_uncorrelated(j))
      throw ConfigError("models.psi_uncorrelated_feature: \"" +
                        models.psi_uncorrelated_feature +
                        "\" is not an uncorrelated feature");
    return j;
  }
  throw ConfigError("models.psi_uncorrelated_feature: feature \"" +
                    models.psi_uncorrelated_feature +
                    "\" does not exist in the schema");
}

std::string utc_now() {
  std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return stamp;
}

}  // namespace

Arena build_arena(const ExperimentConfig& config) {
  Dataset data = load_configured_dataset(config);
  FeatureSchema schema = data.schema;
  const std::size_t psi_index = resolve_psi_index(schema, config.models);

  TrainTestSplit split = split_dataset(data, config.test_fraction,
                                       Rng::derive(config.seed, "split"));

  const std::size_t m = split.train.n_features();
  Vector background(m, 0.0);
  for (std::size_t i = 0; i < split.train.n_rows(); ++i)
    for (std::size_t j = 0; j < m; ++j) background[j] += split.train.x(i, j);
  for (auto& v : background) v /= static_cast<double>(split.train.n_rows());

  ModelPtr f = make_biased_rule(schema);
  ModelPtr psi =
      make_unbiased_rule(schema, psi_index, config.models.psi_confidence);

  DetectorHyper hyper = config.detector.hyper;
  hyper.background = background;
  OODDetector detector =
      train_ood_detector(split.train, config.detector.mode,
                         config.detector.learner, hyper,
                         Rng::derive(config.seed, "detector"));
  Dataset calibration =
      build_ood_training_set(split.test, config.detector.mode, 1,
                             Rng::derive(config.seed, "calibration"),
                             background);
  ModelPtr scaffold = build_scaffold(f, psi, detector);

  ExplainerSetup setup;
  setup.stats = fit_standardization(split.train);
  setup.lime = config.explainers.lime;
  setup.shap = config.explainers.shap;
  setup.shap.background = background;
  setup.sign_policy = config.explainers.shlime_sign_policy;

  return Arena{std::move(schema),
               std::move(split.train),
               std::move(split.test),
               std::move(background),
               std::move(f),
               std::move(psi),
               std::move(detector),
               std::move(calibration),
               std::move(scaffold),
               psi_index,
               std::move(setup)};
}

std::vector<std::string> run_experiment(const ExperimentConfig& config,
                                        std::size_t parallel) {
  if (config.out_dir.empty())
    throw ConfigError("out_dir: required (set it in the config or pass --out)");
  const std::string& out_dir = config.out_dir;

  nlohmann::ordered_json manifest =
      make_run_manifest(config_to_json(config), config.seed);
  write_manifest(manifest, out_dir);

  Arena arena = build_arena(config);
  ReportContext ctx;
  ctx.schema = arena.schema;
  ctx.shlime_sign_policy =
      sign_policy_name(config.explainers.shlime_sign_policy);

  nlohmann::ordered_json derived;
  derived["detector_f1"] = arena.detector.measured_f1();
  derived["n_train"] = arena.train.n_rows();
  derived["n_test"] = arena.test.n_rows();
  std::vector<std::string> files;

  if (config.kind == "top3") {
    const std::vector<std::pair<std::string, ModelPtr>> models = {
        {"biased_rule", arena.f}, {"scaffold", arena.scaffold}};
    const Top3Report report =
        run_top3(models, config.top3.explainers, arena.test, arena.setup,
                 config.top3.n_explain, Rng::derive(config.seed, "top3"));
    files = emit_report(report, ctx, out_dir);
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& cell : report.cells) {
      nlohmann::ordered_json c;
      c["classifier_tag"] = cell.classifier_tag;
      c["explainer_tag"] = cell.explainer_tag;
      c["n_instances"] = cell.n_instances;
      if (!cell.error.empty()) c["error"] = cell.error;
      cells.push_back(c);
    }
    derived["cells"] = cells;
  } else if (config.kind == "sweep") {
    SweepArena sweep_arena{arena.f, arena.psi, arena.detector,
                           arena.calibration};
    const SweepResult result = run_sensitivity_sweep(
        config.sweep.f1_targets, config.sweep.explainers, sweep_arena,
        arena.test, arena.setup, config.sweep.n_explain,
        Rng::derive(config.seed, "sweep"), config.sweep.tolerance, parallel);
    files = emit_report(result, ctx, out_dir);
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& cell : result.cells) {
      nlohmann::ordered_json c;
      c["f1_target"] = cell.f1_target;
      c["f1_achieved"] = cell.f1_achieved;
      c["explainer_tag"] = cell.explainer_tag;
      if (!cell.error.empty()) c["error"] = cell.error;
      cells.push_back(c);
    }
    derived["cells"] = cells;
  } else if (config.kind == "pca") {
    std::size_t n_rows = arena.test.n_rows();
    if (config.pca.rows > 0) n_rows = std::min(n_rows, config.pca.rows);
    Dataset real;
    real.schema = arena.test.schema;
    real.x = Matrix(n_rows, arena.test.n_features(), 0.0);
    real.labels.assign(arena.test.labels.begin(),
                       arena.test.labels.begin() +
                           static_cast<std::ptrdiff_t>(n_rows));
    for (std::size_t i = 0; i < n_rows; ++i)
      real.x.set_row(i, arena.test.x.row(i));
    const PcaProjection projection =
        run_pca(real, config.pca.mode, config.pca.n_per_instance,
                Rng::derive(config.seed, "pca"));
    files = emit_report(projection, out_dir);
    derived["ev1"] = projection.ev1;
    derived["ev2"] = projection.ev2;
    derived["n_points"] = projection.coords.rows;
  } else {
    throw ConfigError("experiment.kind: unknown kind \"" + config.kind + "\"");
  }

  manifest["status"] = "complete";
  manifest["completed_utc"] = utc_now();
  manifest["derived"] = derived;
  manifest["results"] = files;
  write_manifest(manifest, out_dir);
  files.push_back("manifest.json");
  return files;
}

}  // namespace xailab
