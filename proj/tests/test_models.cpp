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

#include <cmath>
#include <doctest.h>
#include <filesystem>
#include <string>

#include "xailab/dataset.hpp"
#include "xailab/error.hpp"
#include "xailab/forest_model.hpp"
#include "xailab/logistic_model.hpp"
#include "xailab/metrics.hpp"
#include "xailab/model_io.hpp"
#include "xailab/rng.hpp"
#include "xailab/rule_model.hpp"
#include "xailab/synthetic.hpp"
#include "xailab/textio.hpp"

using namespace xailab;

namespace {

FeatureSchema binary_schema() {
  FeatureSchema schema;
  schema.features.push_back({"sensitive", FeatureKind::kCategorical,
                             {"0", "1"}});
  schema.features.push_back({"noise_1", FeatureKind::kContinuous, {}});
  schema.features.push_back({"unrelated_1", FeatureKind::kCategorical,
                             {"0", "1"}});
  schema.sensitive_index = 0;
  schema.uncorrelated_indices = {2};
  return schema;
}

// Labels follow a linear score so logistic regression can separate them.
Dataset linear_dataset(std::size_t n, std::uint64_t seed) {
  Dataset data;
  data.schema.features.push_back({"x1", FeatureKind::kContinuous, {}});
  data.schema.features.push_back({"x2", FeatureKind::kContinuous, {}});
  data.x = Matrix(n, 2, 0.0);
  data.labels.resize(n);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = rng.normal();
    const double b = rng.normal();
    data.x.set_row(i, {a, b});
    data.labels[i] = 2.0 * a - b > 0.0 ? 1 : 0;
  }
  return data;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("biased rule copies the sensitive bit with certainty") {
  const ModelPtr f = make_biased_rule(binary_schema());
  CHECK(f->proba1({1.0, 0.3, 0.0}) == doctest::Approx(1.0));
  CHECK(f->proba1({0.0, -2.0, 1.0}) == doctest::Approx(0.0));
  CHECK(f->predict({1.0, 0.0, 0.0}) == 1);
  CHECK(f->predict({0.0, 0.0, 1.0}) == 0);
}

TEST_CASE("rule probabilities interpolate on fractional inputs") {
  // Blended rows (coalition perturbations) land between the categories; the
  // rule answers with a linear ramp rather than a cliff.
  const ModelPtr f = make_biased_rule(binary_schema());
  CHECK(f->proba1({0.5, 0.0, 0.0}) == doctest::Approx(0.5));
  CHECK(f->proba1({0.25, 0.0, 0.0}) == doctest::Approx(0.25));

  const ModelPtr psi = make_unbiased_rule(binary_schema(), 2, 0.65);
  CHECK(psi->proba1({0.0, 0.0, 1.0}) == doctest::Approx(0.65));
  CHECK(psi->proba1({0.0, 0.0, 0.0}) == doctest::Approx(0.35));
  CHECK(psi->proba1({1.0, 9.0, 0.5}) ==
        doctest::Approx(0.35 + 0.3 * 0.5));  // 0.35 + 0.3 u ramp
}

TEST_CASE("unbiased rule ignores every other column") {
  const ModelPtr psi = make_unbiased_rule(binary_schema(), 2, 0.8);
  const double base = psi->proba1({0.0, 0.0, 1.0});
  CHECK(psi->proba1({1.0, 5.0, 1.0}) == doctest::Approx(base));
  CHECK(psi->proba1({0.0, -7.0, 1.0}) == doctest::Approx(base));
}

TEST_CASE("rule factories validate their feature picks") {
  CHECK_THROWS_AS((void)make_unbiased_rule(binary_schema(), 0, 0.8), Error);
  CHECK_THROWS_AS((void)make_unbiased_rule(binary_schema(), 2, 0.5), Error);
  FeatureSchema schema = binary_schema();
  schema.features[0].kind = FeatureKind::kContinuous;
  schema.features[0].categories.clear();
  CHECK_THROWS_AS((void)make_biased_rule(schema), Error);
}

TEST_CASE("metrics match a hand-filled confusion table") {
  // predicted vs actual: TP=2, FP=1, FN=1, TN=2.
  const std::vector<int> predicted = {1, 1, 1, 0, 0, 0};
  const std::vector<int> actual = {1, 1, 0, 1, 0, 0};
  const ClassificationMetrics m = compute_metrics(predicted, actual);
  CHECK(m.accuracy == doctest::Approx(4.0 / 6.0));
  CHECK(m.precision == doctest::Approx(2.0 / 3.0));
  CHECK(m.recall == doctest::Approx(2.0 / 3.0));
  CHECK(m.f1 == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("metrics fall back to zero on empty denominators") {
  const ClassificationMetrics m =
      compute_metrics({0, 0, 0}, {0, 0, 1});
  CHECK(m.precision == 0.0);
  CHECK(m.recall == 0.0);
  CHECK(m.f1 == 0.0);
  CHECK_THROWS_AS((void)compute_metrics({1}, {1, 0}), Error);
}

TEST_CASE("evaluate scores a model against dataset labels") {
  const SyntheticConfig config{500, 1, 0.9, 1, 4};
  const Dataset data = generate_synthetic(config);
  const ModelPtr f = make_biased_rule(data.schema);
  const ClassificationMetrics m = evaluate(*f, data);
  // The rule predicts the sensitive bit, which matches the label ~90%.
  CHECK(m.accuracy > 0.85);
  CHECK(m.accuracy < 0.95);
}

TEST_CASE("logistic regression separates a linear problem") {
  const Dataset data = linear_dataset(600, 31);
  const ModelPtr model = train_logistic(data, {0.5, 400, 1e-4});
  const ClassificationMetrics m = evaluate(*model, data);
  CHECK(m.accuracy > 0.95);
}

TEST_CASE("logistic training loss is nonincreasing") {
  const Dataset data = linear_dataset(200, 8);
  const ModelPtr model = train_logistic(data, {0.2, 50, 1e-4});
  const auto* logistic = dynamic_cast<const LogisticModel*>(model.get());
  REQUIRE(logistic != nullptr);
  const Vector& trace = logistic->loss_trace();
  REQUIRE(trace.size() == 51);
  for (std::size_t i = 1; i < trace.size(); ++i)
    CHECK(trace[i] <= trace[i - 1] + 1e-9);
}

TEST_CASE("logistic probabilities are monotone along the learned direction") {
  const Dataset data = linear_dataset(600, 31);
  const ModelPtr model = train_logistic(data, {0.5, 400, 1e-4});
  // Score 2a - b grows with a at fixed b.
  CHECK(model->proba1({2.0, 0.0}) > model->proba1({1.0, 0.0}));
  CHECK(model->proba1({1.0, 0.0}) > model->proba1({0.0, 0.0}));
  const auto p = model->predict_proba({0.3, -0.2});
  CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("forest fits its training data and stays deterministic") {
  const SyntheticConfig config{300, 2, 0.95, 1, 12};
  const Dataset data = generate_synthetic(config);
  const ForestHyper hyper{50, 6, 3, 0, 0.5};
  const ModelPtr a = train_forest(data, hyper);
  const ModelPtr b = train_forest(data, hyper);
  const ClassificationMetrics m = evaluate(*a, data);
  CHECK(m.accuracy > 0.9);
  for (std::size_t i = 0; i < 20; ++i) {
    const Vector row = data.x.row(i);
    CHECK(a->proba1(row) == b->proba1(row));
  }
}

TEST_CASE("forest seed changes the ensemble") {
  const SyntheticConfig config{300, 2, 0.8, 1, 12};
  const Dataset data = generate_synthetic(config);
  const ModelPtr a = train_forest(data, {50, 6, 3, 0, 0.5});
  const ModelPtr c = train_forest(data, {50, 6, 4, 0, 0.5});
  bool any_diff = false;
  for (std::size_t i = 0; i < 50 && !any_diff; ++i)
    any_diff = a->proba1(data.x.row(i)) != c->proba1(data.x.row(i));
  CHECK(any_diff);
}

TEST_CASE("forest probability is the fraction of class-1 votes") {
  const SyntheticConfig config{200, 1, 0.9, 1, 5};
  const Dataset data = generate_synthetic(config);
  const ModelPtr model = train_forest(data, {30, 4, 9, 0, 0.5});
  const auto* forest = dynamic_cast<const ForestModel*>(model.get());
  REQUIRE(forest != nullptr);
  const Vector row = data.x.row(3);
  double ones = 0.0;
  for (std::size_t t = 0; t < forest->trees().size(); ++t)
    ones += forest->tree_vote(t, row);
  CHECK(model->proba1(row) == doctest::Approx(ones / 30.0));
}

TEST_CASE("vote threshold biases leaves toward class 0") {
  const SyntheticConfig config{400, 2, 0.9, 1, 19};
  const Dataset data = generate_synthetic(config);
  const ModelPtr plain = train_forest(data, {40, 3, 7, 0, 0.5});
  const ModelPtr strict = train_forest(data, {40, 3, 7, 0, 0.9});
  // A higher threshold can only lower each leaf's vote, hence the forest's
  // class-1 probability.
  double sum_plain = 0.0, sum_strict = 0.0;
  for (std::size_t i = 0; i < 100; ++i) {
    sum_plain += plain->proba1(data.x.row(i));
    sum_strict += strict->proba1(data.x.row(i));
  }
  CHECK(sum_strict <= sum_plain + 1e-12);
  CHECK_THROWS_AS((void)train_forest(data, {10, 3, 1, 0, 1.0}), Error);
  CHECK_THROWS_AS((void)train_forest(data, {10, 3, 1, 0, -0.1}), Error);
}

TEST_CASE("forest hyper validation rejects empty settings") {
  const SyntheticConfig config{50, 1, 0.9, 1, 2};
  const Dataset data = generate_synthetic(config);
  CHECK_THROWS_AS((void)train_forest(data, {0, 4, 1, 0, 0.5}), Error);
  CHECK_THROWS_AS((void)train_forest(data, {10, 0, 1, 0, 0.5}), Error);
}

TEST_CASE("rule model round-trips through model io") {
  const ModelPtr f = make_unbiased_rule(binary_schema(), 2, 0.7);
  const std::string path = temp_path("xailab_rule.json");
  save_model(path, *f);
  const ModelPtr back = load_model(path);
  CHECK(model_type_name(*back) == "rule");
  for (const double u : {0.0, 0.25, 1.0})
    CHECK(back->proba1({0.0, 1.0, u}) == f->proba1({0.0, 1.0, u}));
  std::filesystem::remove(path);
}

TEST_CASE("logistic model round-trips through model io") {
  const Dataset data = linear_dataset(200, 44);
  const ModelPtr model = train_logistic(data, {0.3, 100, 1e-4});
  const std::string path = temp_path("xailab_logistic.json");
  save_model(path, *model);
  const ModelPtr back = load_model(path);
  CHECK(model_type_name(*back) == "logistic");
  for (std::size_t i = 0; i < 20; ++i)
    CHECK(back->proba1(data.x.row(i)) ==
          doctest::Approx(model->proba1(data.x.row(i))).epsilon(1e-12));
  std::filesystem::remove(path);
}

TEST_CASE("forest model round-trips through model io with its threshold") {
  const SyntheticConfig config{150, 1, 0.9, 1, 3};
  const Dataset data = generate_synthetic(config);
  const ModelPtr model = train_forest(data, {20, 4, 11, 2, 0.7});
  const std::string path = temp_path("xailab_forest.json");
  save_model(path, *model);
  const ModelPtr back = load_model(path);
  const auto* forest = dynamic_cast<const ForestModel*>(back.get());
  REQUIRE(forest != nullptr);
  CHECK(forest->hyper().vote_threshold == 0.7);
  CHECK(forest->hyper().mtry == 2);
  for (std::size_t i = 0; i < 30; ++i)
    CHECK(back->proba1(data.x.row(i)) == model->proba1(data.x.row(i)));
  std::filesystem::remove(path);
}

TEST_CASE("model io rejects unknown types and versions") {
  const std::string path = temp_path("xailab_bad_model.json");
  write_text_file(path, R"({"format_version": 999, "type": "rule"})");
  CHECK_THROWS_AS((void)load_model(path), Error);
  write_text_file(path, R"({"format_version": 1, "type": "quantum"})");
  CHECK_THROWS_AS((void)load_model(path), Error);
  std::filesystem::remove(path);
}
