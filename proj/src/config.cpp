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

#include "xailab/config.hpp"

#include <cstdlib>
#include <initializer_list>
#include <string>

#include "xailab/error.hpp"
#include "xailab/textio.hpp"

namespace xailab {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message);
}

const Json* opt(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const Json& as_object(const Json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  return v;
}

void check_keys(const Json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* name : allowed)
      if (key == name) known = true;
    if (!known) fail(path.empty() ? key : path + "." + key, "unknown field");
  }
}

std::uint64_t as_uint(const Json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  fail(path, "expected a non-negative integer");
}

double as_double(const Json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::string as_string(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::size_t size_or(const Json& obj, const std::string& path, const char* key,
                    std::size_t fallback) {
  const Json* v = opt(obj, key);
  return v ? static_cast<std::size_t>(as_uint(*v, path + "." + key)) : fallback;
}

double double_or(const Json& obj, const std::string& path, const char* key,
                 double fallback) {
  const Json* v = opt(obj, key);
  return v ? as_double(*v, path + "." + key) : fallback;
}

std::string string_or(const Json& obj, const std::string& path,
                      const char* key, const std::string& fallback) {
  const Json* v = opt(obj, key);
  return v ? as_string(*v, path + "." + key) : fallback;
}

PerturbMode mode_from_name(const std::string& name, const std::string& path) {
  if (name == "lime") return PerturbMode::kLime;
  if (name == "shap") return PerturbMode::kShap;
  fail(path, "must be \"lime\" or \"shap\", got \"" + name + "\"");
}

std::string mode_name(PerturbMode mode) {
  return mode == PerturbMode::kLime ? "lime" : "shap";
}

std::vector<std::string> parse_explainer_list(const Json& obj,
                                              const std::string& path,
                                              const char* key) {
  const Json* v = opt(obj, key);
  if (!v) fail(path + "." + key, "required");
  if (!v->is_array() || v->empty())
    fail(path + "." + key, "expected a non-empty array of explainer tags");
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < v->size(); ++i) {
    const std::string item_path =
        path + "." + key + "[" + std::to_string(i) + "]";
    const std::string tag = as_string((*v)[i], item_path);
    if (tag != "lime" && tag != "shap" && tag != "shlime")
      fail(item_path, "unknown explainer tag \"" + tag + "\"");
    tags.push_back(tag);
  }
  return tags;
}

void parse_dataset(const Json& v, ExperimentConfig& config) {
  const Json& obj = as_object(v, "dataset");
  check_keys(obj, "dataset", {"synthetic", "csv"});
  const Json* synthetic = opt(obj, "synthetic");
  const Json* csv = opt(obj, "csv");
  if ((synthetic != nullptr) == (csv != nullptr))
    fail("dataset", "exactly one of synthetic or csv must be set");
  if (synthetic) {
    const Json& s = as_object(*synthetic, "dataset.synthetic");
    check_keys(s, "dataset.synthetic",
               {"rows", "noise_features", "bias", "uncorrelated"});
    SyntheticSpec spec;
    const Json* rows = opt(s, "rows");
    if (!rows) fail("dataset.synthetic.rows", "required");
    spec.rows = static_cast<std::size_t>(
        as_uint(*rows, "dataset.synthetic.rows"));
    if (spec.rows == 0) fail("dataset.synthetic.rows", "must be >= 1");
    spec.noise_features =
        size_or(s, "dataset.synthetic", "noise_features", spec.noise_features);
    spec.bias = double_or(s, "dataset.synthetic", "bias", spec.bias);
    if (!(spec.bias > 0.5 && spec.bias <= 1.0))
      fail("dataset.synthetic.bias", "must lie in (0.5, 1]");
    spec.uncorrelated =
        size_or(s, "dataset.synthetic", "uncorrelated", spec.uncorrelated);
    if (spec.uncorrelated == 0)
      fail("dataset.synthetic.uncorrelated", "must be >= 1");
    config.synthetic = spec;
  } else {
    const Json& c = as_object(*csv, "dataset.csv");
    check_keys(c, "dataset.csv", {"data", "schema"});
    CsvSpec spec;
    spec.data_path = string_or(c, "dataset.csv", "data", "");
    spec.schema_path = string_or(c, "dataset.csv", "schema", "");
    if (spec.data_path.empty()) fail("dataset.csv.data", "required");
    if (spec.schema_path.empty()) fail("dataset.csv.schema", "required");
    config.csv = spec;
  }
}

void parse_detector(const Json& v, DetectorSpec& spec) {
  const Json& obj = as_object(v, "detector");
  check_keys(obj, "detector",
             {"mode", "learner", "n_per_instance", "holdout_fraction", "tau",
              "forest", "logistic"});
  spec.mode = mode_from_name(string_or(obj, "detector", "mode", "lime"),
                             "detector.mode");
  const std::string learner = string_or(obj, "detector", "learner", "forest");
  if (learner == "forest")
    spec.learner = DetectorLearner::kForest;
  else if (learner == "logistic")
    spec.learner = DetectorLearner::kLogistic;
  else
    fail("detector.learner", "must be \"forest\" or \"logistic\", got \"" +
                                 learner + "\"");
  spec.hyper.n_per_instance = size_or(obj, "detector", "n_per_instance",
                                      spec.hyper.n_per_instance);
  if (spec.hyper.n_per_instance == 0)
    fail("detector.n_per_instance", "must be >= 1");
  spec.hyper.holdout_fraction = double_or(obj, "detector", "holdout_fraction",
                                          spec.hyper.holdout_fraction);
  if (!(spec.hyper.holdout_fraction > 0.0 &&
        spec.hyper.holdout_fraction < 1.0))
    fail("detector.holdout_fraction", "must lie in (0, 1)");
  spec.hyper.tau = double_or(obj, "detector", "tau", spec.hyper.tau);
  if (!(spec.hyper.tau >= 0.0 && spec.hyper.tau <= 1.0))
    fail("detector.tau", "must lie in [0, 1]");
  if (const Json* f = opt(obj, "forest")) {
    const Json& fo = as_object(*f, "detector.forest");
    check_keys(fo, "detector.forest",
               {"n_trees", "max_depth", "mtry", "vote_threshold"});
    auto& forest = spec.hyper.forest;
    forest.n_trees = size_or(fo, "detector.forest", "n_trees", forest.n_trees);
    if (forest.n_trees == 0) fail("detector.forest.n_trees", "must be >= 1");
    forest.max_depth =
        size_or(fo, "detector.forest", "max_depth", forest.max_depth);
    if (forest.max_depth == 0)
      fail("detector.forest.max_depth", "must be >= 1");
    forest.mtry = size_or(fo, "detector.forest", "mtry", forest.mtry);
    forest.vote_threshold = double_or(fo, "detector.forest", "vote_threshold",
                                      forest.vote_threshold);
    if (!(forest.vote_threshold >= 0.0 && forest.vote_threshold < 1.0))
      fail("detector.forest.vote_threshold", "must lie in [0, 1)");
  }
  if (const Json* l = opt(obj, "logistic")) {
    const Json& lo = as_object(*l, "detector.logistic");
    check_keys(lo, "detector.logistic", {"learning_rate", "epochs", "l2"});
    auto& logistic = spec.hyper.logistic;
    logistic.learning_rate = double_or(lo, "detector.logistic",
                                       "learning_rate",
                                       logistic.learning_rate);
    if (!(logistic.learning_rate > 0.0))
      fail("detector.logistic.learning_rate", "must be > 0");
    logistic.epochs = size_or(lo, "detector.logistic", "epochs",
                              logistic.epochs);
    if (logistic.epochs == 0) fail("detector.logistic.epochs", "must be >= 1");
    logistic.l2 = double_or(lo, "detector.logistic", "l2", logistic.l2);
    if (logistic.l2 < 0.0) fail("detector.logistic.l2", "must be >= 0");
  }
}

void parse_explainers(const Json& v, ExplainerSpec& spec) {
  const Json& obj = as_object(v, "explainers");
  check_keys(obj, "explainers", {"lime", "shap", "shlime"});
  if (const Json* l = opt(obj, "lime")) {
    const Json& lo = as_object(*l, "explainers.lime");
    check_keys(lo, "explainers.lime", {"n_samples", "sigma", "k_top", "ridge"});
    spec.lime.n_samples =
        size_or(lo, "explainers.lime", "n_samples", spec.lime.n_samples);
    if (spec.lime.n_samples == 0)
      fail("explainers.lime.n_samples", "must be >= 1");
    spec.lime.sigma = double_or(lo, "explainers.lime", "sigma",
                                spec.lime.sigma);
    if (spec.lime.sigma < 0.0) fail("explainers.lime.sigma", "must be >= 0");
    spec.lime.k_top = size_or(lo, "explainers.lime", "k_top", spec.lime.k_top);
    spec.lime.ridge = double_or(lo, "explainers.lime", "ridge",
                                spec.lime.ridge);
    if (spec.lime.ridge < 0.0) fail("explainers.lime.ridge", "must be >= 0");
  }
  if (const Json* s = opt(obj, "shap")) {
    const Json& so = as_object(*s, "explainers.shap");
    check_keys(so, "explainers.shap", {"n_coalitions", "exact_threshold"});
    spec.shap.n_coalitions = size_or(so, "explainers.shap", "n_coalitions",
                                     spec.shap.n_coalitions);
    if (spec.shap.n_coalitions == 0)
      fail("explainers.shap.n_coalitions", "must be >= 1");
    spec.shap.exact_threshold = size_or(so, "explainers.shap",
                                        "exact_threshold",
                                        spec.shap.exact_threshold);
    if (spec.shap.exact_threshold > 24)
      fail("explainers.shap.exact_threshold", "must be <= 24");
  }
  if (const Json* sh = opt(obj, "shlime")) {
    const Json& so = as_object(*sh, "explainers.shlime");
    check_keys(so, "explainers.shlime", {"sign_policy"});
    const std::string name =
        string_or(so, "explainers.shlime", "sign_policy", "signed_product");
    try {
      spec.shlime_sign_policy = sign_policy_from_name(name);
    } catch (const Error&) {
      fail("explainers.shlime.sign_policy",
           "unknown sign policy \"" + name + "\"");
    }
  }
}

void parse_experiment(const Json& v, ExperimentConfig& config) {
  const Json& obj = as_object(v, "experiment");
  const Json* kind = opt(obj, "kind");
  if (!kind) fail("experiment.kind", "required");
  config.kind = as_string(*kind, "experiment.kind");
  if (config.kind == "top3") {
    check_keys(obj, "experiment", {"kind", "n_explain", "explainers"});
    config.top3.n_explain =
        size_or(obj, "experiment", "n_explain", config.top3.n_explain);
    if (config.top3.n_explain == 0)
      fail("experiment.n_explain", "must be >= 1");
    if (opt(obj, "explainers"))
      config.top3.explainers = parse_explainer_list(obj, "experiment",
                                                    "explainers");
  } else if (config.kind == "sweep") {
    check_keys(obj, "experiment",
               {"kind", "f1_targets", "explainers", "n_explain", "tolerance"});
    const Json* targets = opt(obj, "f1_targets");
    if (!targets) fail("experiment.f1_targets", "required");
    if (!targets->is_array() || targets->empty())
      fail("experiment.f1_targets", "expected a non-empty array of numbers");
    for (std::size_t i = 0; i < targets->size(); ++i) {
      const std::string item_path =
          "experiment.f1_targets[" + std::to_string(i) + "]";
      const double t = as_double((*targets)[i], item_path);
      if (!(t > 0.0 && t < 1.0)) fail(item_path, "must lie in (0, 1)");
      if (!config.sweep.f1_targets.empty() &&
          t <= config.sweep.f1_targets.back())
        fail(item_path, "targets must be strictly ascending");
      config.sweep.f1_targets.push_back(t);
    }
    config.sweep.explainers =
        parse_explainer_list(obj, "experiment", "explainers");
    config.sweep.n_explain =
        size_or(obj, "experiment", "n_explain", config.sweep.n_explain);
    if (config.sweep.n_explain == 0)
      fail("experiment.n_explain", "must be >= 1");
    config.sweep.tolerance =
        double_or(obj, "experiment", "tolerance", config.sweep.tolerance);
    if (!(config.sweep.tolerance > 0.0 && config.sweep.tolerance <= 0.5))
      fail("experiment.tolerance", "must lie in (0, 0.5]");
  } else if (config.kind == "pca") {
    check_keys(obj, "experiment", {"kind", "mode", "n_per_instance", "rows"});
    config.pca.mode = mode_from_name(
        string_or(obj, "experiment", "mode", "lime"), "experiment.mode");
    config.pca.n_per_instance =
        size_or(obj, "experiment", "n_per_instance",
                config.pca.n_per_instance);
    if (config.pca.n_per_instance == 0)
      fail("experiment.n_per_instance", "must be >= 1");
    config.pca.rows = size_or(obj, "experiment", "rows", config.pca.rows);
  } else {
    fail("experiment.kind",
         "must be \"top3\", \"sweep\" or \"pca\", got \"" + config.kind +
             "\"");
  }
}

}  // namespace

ExperimentConfig parse_experiment_config(const nlohmann::ordered_json& root) {
  const Json* body = &root;
  if (root.is_object() && root.contains("artifact") &&
      root.contains("config")) {
    body = &root.at("config");  // run manifests embed the config they ran
  }
  const Json& obj = as_object(*body, "config");
  check_keys(obj, "",
             {"seed", "out_dir", "dataset", "split", "models", "detector",
              "explainers", "experiment"});

  ExperimentConfig config;
  if (const Json* seed = opt(obj, "seed"))
    config.seed = as_uint(*seed, "seed");
  config.out_dir = string_or(obj, "", "out_dir", "");

  const Json* dataset = opt(obj, "dataset");
  if (!dataset) fail("dataset", "required");
  parse_dataset(*dataset, config);

  if (const Json* split = opt(obj, "split")) {
    const Json& so = as_object(*split, "split");
    check_keys(so, "split", {"test_fraction"});
    config.test_fraction =
        double_or(so, "split", "test_fraction", config.test_fraction);
    if (!(config.test_fraction > 0.0 && config.test_fraction < 1.0))
      fail("split.test_fraction", "must lie in (0, 1)");
  }

  if (const Json* models = opt(obj, "models")) {
    const Json& mo = as_object(*models, "models");
    check_keys(mo, "models", {"psi_uncorrelated_feature", "psi_confidence"});
    config.models.psi_uncorrelated_feature =
        string_or(mo, "models", "psi_uncorrelated_feature", "");
    config.models.psi_confidence = double_or(
        mo, "models", "psi_confidence", config.models.psi_confidence);
    if (!(config.models.psi_confidence > 0.5 &&
          config.models.psi_confidence <= 1.0))
      fail("models.psi_confidence", "must lie in (0.5, 1]");
  }

  if (const Json* detector = opt(obj, "detector"))
    parse_detector(*detector, config.detector);
  if (const Json* explainers = opt(obj, "explainers"))
    parse_explainers(*explainers, config.explainers);

  const Json* experiment = opt(obj, "experiment");
  if (!experiment) fail("experiment", "required");
  parse_experiment(*experiment, config);
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const Error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": invalid JSON: " + e.what());
  }
  ExperimentConfig config = parse_experiment_config(root);
  if (const char* env = std::getenv("XAILAB_SEED")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw ConfigError("XAILAB_SEED: must be a non-negative integer, got \"" +
                        std::string(env) + "\"");
    config.seed = static_cast<std::uint64_t>(value);
  }
  return config;
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& config) {
  Json j;
  j["seed"] = config.seed;
  j["out_dir"] = config.out_dir;
  if (config.synthetic) {
    j["dataset"]["synthetic"] = {
        {"rows", config.synthetic->rows},
        {"noise_features", config.synthetic->noise_features},
        {"bias", config.synthetic->bias},
        {"uncorrelated", config.synthetic->uncorrelated}};
  } else if (config.csv) {
    j["dataset"]["csv"] = {{"data", config.csv->data_path},
                           {"schema", config.csv->schema_path}};
  }
  j["split"] = {{"test_fraction", config.test_fraction}};
  j["models"] = {
      {"psi_uncorrelated_feature", config.models.psi_uncorrelated_feature},
      {"psi_confidence", config.models.psi_confidence}};
  const auto& hyper = config.detector.hyper;
  j["detector"] = {
      {"mode", mode_name(config.detector.mode)},
      {"learner", config.detector.learner == DetectorLearner::kForest
                      ? "forest"
                      : "logistic"},
      {"n_per_instance", hyper.n_per_instance},
      {"holdout_fraction", hyper.holdout_fraction},
      {"tau", hyper.tau},
      {"forest",
       {{"n_trees", hyper.forest.n_trees},
        {"max_depth", hyper.forest.max_depth},
        {"mtry", hyper.forest.mtry},
        {"vote_threshold", hyper.forest.vote_threshold}}},
      {"logistic",
       {{"learning_rate", hyper.logistic.learning_rate},
        {"epochs", hyper.logistic.epochs},
        {"l2", hyper.logistic.l2}}}};
  j["explainers"] = {
      {"lime",
       {{"n_samples", config.explainers.lime.n_samples},
        {"sigma", config.explainers.lime.sigma},
        {"k_top", config.explainers.lime.k_top},
        {"ridge", config.explainers.lime.ridge}}},
      {"shap",
       {{"n_coalitions", config.explainers.shap.n_coalitions},
        {"exact_threshold", config.explainers.shap.exact_threshold}}},
      {"shlime",
       {{"sign_policy",
         sign_policy_name(config.explainers.shlime_sign_policy)}}}};
  Json experiment;
  experiment["kind"] = config.kind;
  if (config.kind == "top3") {
    experiment["n_explain"] = config.top3.n_explain;
    experiment["explainers"] = config.top3.explainers;
  } else if (config.kind == "sweep") {
    experiment["f1_targets"] = config.sweep.f1_targets;
    experiment["explainers"] = config.sweep.explainers;
    experiment["n_explain"] = config.sweep.n_explain;
    experiment["tolerance"] = config.sweep.tolerance;
  } else if (config.kind == "pca") {
    experiment["mode"] = mode_name(config.pca.mode);
    experiment["n_per_instance"] = config.pca.n_per_instance;
    experiment["rows"] = config.pca.rows;
  }
  j["experiment"] = experiment;
  return j;
}

}  // namespace xailab
