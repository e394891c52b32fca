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

#include "xailab/model_io.hpp"

#include <nlohmann/json.hpp>

#include "xailab/error.hpp"
#include "xailab/forest_model.hpp"
#include "xailab/logistic_model.hpp"
#include "xailab/rule_model.hpp"
#include "xailab/scaffold.hpp"
#include "xailab/textio.hpp"

namespace xailab {

namespace {

constexpr int kFormatVersion = 1;

using Json = nlohmann::ordered_json;

Json encode_rule(const RuleModel& m) {
  Json j;
  j["feature_index"] = m.feature_index();
  j["trigger_value"] = m.trigger_value();
  j["positive_when_match"] = m.positive_when_match();
  j["confidence"] = m.confidence();
  return j;
}

Json encode_logistic(const LogisticModel& m) {
  Json j;
  j["weights"] = m.weights();
  j["bias"] = m.bias();
  j["means"] = m.means();
  j["stds"] = m.stds();
  j["learning_rate"] = m.hyper().learning_rate;
  j["epochs"] = m.hyper().epochs;
  j["l2"] = m.hyper().l2;
  j["loss_trace"] = m.loss_trace();
  return j;
}

Json encode_forest(const ForestModel& m) {
  Json j;
  j["n_trees"] = m.hyper().n_trees;
  j["max_depth"] = m.hyper().max_depth;
  j["seed"] = m.hyper().seed;
  j["mtry"] = m.hyper().mtry;
  j["vote_threshold"] = m.hyper().vote_threshold;
  j["n_features"] = m.n_features();
  Json trees = Json::array();
  for (const auto& tree : m.trees()) {
    Json nodes = Json::array();
    for (const auto& n : tree)
      nodes.push_back(
          Json::array({n.feature, n.threshold, n.left, n.right, n.vote}));
    trees.push_back(nodes);
  }
  j["trees"] = trees;
  return j;
}

ModelPtr decode_rule(const Json& j) {
  return std::make_shared<RuleModel>(
      j.at("feature_index").get<std::size_t>(),
      j.at("trigger_value").get<double>(),
      j.at("positive_when_match").get<bool>(),
      j.at("confidence").get<double>());
}

ModelPtr decode_logistic(const Json& j) {
  LogisticHyper hyper;
  hyper.learning_rate = j.at("learning_rate").get<double>();
  hyper.epochs = j.at("epochs").get<std::size_t>();
  hyper.l2 = j.at("l2").get<double>();
  return std::make_shared<LogisticModel>(
      j.at("weights").get<Vector>(), j.at("bias").get<double>(),
      j.at("means").get<Vector>(), j.at("stds").get<Vector>(), hyper,
      j.at("loss_trace").get<Vector>());
}

ModelPtr decode_forest(const Json& j) {
  ForestHyper hyper;
  hyper.n_trees = j.at("n_trees").get<std::size_t>();
  hyper.max_depth = j.at("max_depth").get<std::size_t>();
  hyper.seed = j.at("seed").get<std::uint64_t>();
  hyper.mtry = j.value("mtry", std::size_t{0});
  hyper.vote_threshold = j.value("vote_threshold", 0.5);
  std::vector<Tree> trees;
  for (const auto& jt : j.at("trees")) {
    Tree tree;
    for (const auto& jn : jt) {
      if (!jn.is_array() || jn.size() != 5)
        throw Error("models", "malformed tree node in model file");
      tree.push_back({jn[0].get<int>(), jn[1].get<double>(),
                      jn[2].get<int>(), jn[3].get<int>(), jn[4].get<int>()});
    }
    trees.push_back(std::move(tree));
  }
  return std::make_shared<ForestModel>(std::move(trees), hyper,
                                       j.at("n_features").get<std::size_t>());
}

}  // namespace

void save_model(const std::string& path, const BlackBoxModel& model) {
  Json j;
  j["format_version"] = kFormatVersion;
  if (const auto* rule = dynamic_cast<const RuleModel*>(&model)) {
    j["model_type"] = "rule";
    j.update(encode_rule(*rule));
  } else if (const auto* logistic =
                 dynamic_cast<const LogisticModel*>(&model)) {
    j["model_type"] = "logistic";
    j.update(encode_logistic(*logistic));
  } else if (const auto* forest = dynamic_cast<const ForestModel*>(&model)) {
    j["model_type"] = "forest";
    j.update(encode_forest(*forest));
  } else {
    throw Error("models", "model type does not support serialization");
  }
  write_text_file(path, j.dump(2) + "\n");
}

ModelPtr load_model(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("models", "model file " + path + ": " + e.what());
  }
  if (!j.contains("format_version") ||
      j["format_version"].get<int>() != kFormatVersion)
    throw Error("models", "model file " + path + ": unsupported format version");
  const std::string type = j.value("model_type", std::string());
  try {
    if (type == "rule") return decode_rule(j);
    if (type == "logistic") return decode_logistic(j);
    if (type == "forest") return decode_forest(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error("models", "model file " + path + ": " + e.what());
  }
  throw Error("models", "model file " + path + ": unknown model type '" +
                            type + "'");
}

std::string model_type_name(const BlackBoxModel& model) {
  if (dynamic_cast<const RuleModel*>(&model)) return "rule";
  if (dynamic_cast<const LogisticModel*>(&model)) return "logistic";
  if (dynamic_cast<const ForestModel*>(&model)) return "forest";
  if (dynamic_cast<const ScaffoldModel*>(&model)) return "scaffold";
  return "opaque";
}

}  // namespace xailab
