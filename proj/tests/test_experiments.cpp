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
#include <cstddef>
#include <cstdlib>
#include <doctest.h>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "xailab/error.hpp"
#include "xailab/experiments.hpp"
#include "xailab/report.hpp"
#include "xailab/rng.hpp"
#include "xailab/rule_model.hpp"
#include "xailab/synthetic.hpp"
#include "xailab/textio.hpp"

using namespace xailab;

namespace {

struct Fixture {
  Dataset data;
  ModelPtr f;
  ExplainerSetup setup;
};

Vector column_means(const Dataset& d) {
  Vector means(d.n_features(), 0.0);
  for (std::size_t j = 0; j < d.n_features(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < d.n_rows(); ++i) s += d.x(i, j);
    means[j] = s / static_cast<double>(d.n_rows());
  }
  return means;
}

Fixture make_fixture() {
  Fixture fx;
  fx.data = generate_synthetic({300, 3, 0.9, 1, 7});
  fx.f = make_biased_rule(fx.data.schema);
  fx.setup.stats = fit_standardization(fx.data);
  fx.setup.lime.n_samples = 64;
  fx.setup.shap.background = column_means(fx.data);
  return fx;
}

std::map<std::string, double> recompute_fractions(
    const std::vector<AttributionRecord>& records, const FeatureSchema& schema,
    const std::string& classifier, const std::string& explainer) {
  std::map<std::string, double> fractions;
  for (const auto& spec : schema.features) fractions[spec.name] = 0.0;
  std::size_t n = 0;
  for (const auto& rec : records) {
    if (rec.classifier_tag != classifier || rec.explainer_tag != explainer)
      continue;
    ++n;
    const auto order = rank_features(rec.attribution);
    for (std::size_t r = 0; r < std::min<std::size_t>(3, order.size()); ++r)
      fractions[schema.features[order[r]].name] += 1.0;
  }
  for (auto& [name, count] : fractions)
    count /= static_cast<double>(n);
  return fractions;
}

std::string temp_dir(const std::string& tag) {
  const auto dir =
      std::filesystem::temp_directory_path() / ("xailab_test_" + tag);
  std::filesystem::remove_all(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("run_explainer dispatches on the tag and rejects unknowns") {
  const Fixture fx = make_fixture();
  const Vector origin = fx.data.x.row(0);
  CHECK(run_explainer("lime", *fx.f, origin, fx.setup, 1).tag == "lime");
  CHECK(run_explainer("shap", *fx.f, origin, fx.setup, 1).tag == "shap");
  CHECK(run_explainer("shlime", *fx.f, origin, fx.setup, 1).tag == "shlime");
  CHECK_THROWS_WITH_AS(
      (void)run_explainer("gradient", *fx.f, origin, fx.setup, 1),
      doctest::Contains("unknown explainer tag"), Error);
}

TEST_CASE("top3 tallies cover every cell and conserve the slot budget") {
  const Fixture fx = make_fixture();
  const std::vector<std::string> tags = {"lime", "shap", "shlime"};
  const Top3Report report =
      run_top3({{"biased_rule", fx.f}}, tags, fx.data, fx.setup, 20, 11);

  REQUIRE(report.cells.size() == 3);
  CHECK(report.records.size() == 3 * 20);
  for (const auto& cell : report.cells) {
    CHECK(cell.error.empty());
    CHECK(cell.n_instances == 20);
    double total = 0.0;
    for (const auto& [name, fraction] : cell.fractions) {
      CHECK(fraction >= 0.0);
      CHECK(fraction <= 1.0);
      CHECK(fx.data.schema.index_of(name) < fx.data.n_features());
      total += fraction;
    }
    // Every instance contributes exactly three top slots.
    CHECK(total == doctest::Approx(3.0).epsilon(1e-12));
  }
}

TEST_CASE("top3 fractions are recomputable from the per-instance records") {
  const Fixture fx = make_fixture();
  const Top3Report report = run_top3({{"biased_rule", fx.f}}, {"lime", "shap"},
                                     fx.data, fx.setup, 15, 13);
  for (const auto& cell : report.cells) {
    const auto again = recompute_fractions(
        report.records, fx.data.schema, cell.classifier_tag,
        cell.explainer_tag);
    REQUIRE(again.size() == cell.fractions.size());
    for (const auto& [name, fraction] : cell.fractions)
      CHECK(again.at(name) == doctest::Approx(fraction).epsilon(1e-12));
  }
}

TEST_CASE("top3 flags the sensitive feature on the undisguised biased rule") {
  const Fixture fx = make_fixture();
  const Top3Report report = run_top3({{"biased_rule", fx.f}}, {"lime", "shap"},
                                     fx.data, fx.setup, 25, 17);
  const std::string sensitive =
      fx.data.schema.features[fx.data.schema.sensitive_index].name;
  for (const auto& cell : report.cells)
    CHECK(cell.fractions.at(sensitive) >= 0.95);
}

TEST_CASE("a failing explainer aborts only its own cell") {
  const Fixture fx = make_fixture();
  const Top3Report report =
      run_top3({{"biased_rule", fx.f}}, {"lime", "gradient", "shap"},
               fx.data, fx.setup, 10, 19);
  REQUIRE(report.cells.size() == 3);
  CHECK(report.cells[0].error.empty());
  CHECK(report.cells[1].error.find("unknown explainer tag") !=
        std::string::npos);
  CHECK(report.cells[1].fractions.empty());
  CHECK(report.cells[2].error.empty());
  CHECK(report.records.size() == 2 * 10);
}

TEST_CASE("top3 is deterministic and validates the sample budget") {
  const Fixture fx = make_fixture();
  const Top3Report a = run_top3({{"biased_rule", fx.f}}, {"lime"}, fx.data,
                                fx.setup, 10, 23);
  const Top3Report b = run_top3({{"biased_rule", fx.f}}, {"lime"}, fx.data,
                                fx.setup, 10, 23);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].instance_id == b.records[i].instance_id);
    CHECK(a.records[i].attribution.weights ==
          b.records[i].attribution.weights);
  }
  CHECK(a.cells[0].fractions == b.cells[0].fractions);

  CHECK_THROWS_AS((void)run_top3({{"biased_rule", fx.f}}, {"lime"}, fx.data,
                                 fx.setup, 0, 23),
                  Error);
  CHECK_THROWS_AS((void)run_top3({{"biased_rule", fx.f}}, {"lime"}, fx.data,
                                 fx.setup, fx.data.n_rows() + 1, 23),
                  Error);
}

namespace {

SweepArena make_sweep_arena(const Fixture& fx, std::uint64_t seed) {
  DetectorHyper hyper;
  hyper.n_per_instance = 2;
  hyper.forest = {60, 10, 0, 0};
  hyper.background = fx.setup.shap.background;
  OODDetector detector =
      train_ood_detector(fx.data, PerturbMode::kLime, DetectorLearner::kForest,
                         hyper, seed);
  const Dataset calibration = build_ood_training_set(
      fx.data, PerturbMode::kLime, 1, Rng::derive(seed, "cal"),
      fx.setup.shap.background);
  const std::size_t psi_index = fx.data.schema.uncorrelated_indices[0];
  return SweepArena{fx.f, make_unbiased_rule(fx.data.schema, psi_index, 0.65),
                    std::move(detector), calibration};
}

}  // namespace

TEST_CASE("sweep emits one cell per (target, explainer) in target-major order") {
  const Fixture fx = make_fixture();
  const SweepArena arena = make_sweep_arena(fx, 29);
  const std::vector<double> targets = {0.6, 0.8};
  const SweepResult result = run_sensitivity_sweep(
      targets, {"lime", "shap"}, arena, fx.data, fx.setup, 8, 31);

  REQUIRE(result.cells.size() == 4);
  CHECK(result.cells[0].f1_target == 0.6);
  CHECK(result.cells[0].explainer_tag == "lime");
  CHECK(result.cells[1].f1_target == 0.6);
  CHECK(result.cells[1].explainer_tag == "shap");
  CHECK(result.cells[2].f1_target == 0.8);
  CHECK(result.cells[3].f1_target == 0.8);
  for (const auto& cell : result.cells) {
    if (!cell.error.empty()) continue;
    CHECK(cell.f1_achieved == doctest::Approx(cell.f1_target).epsilon(0.05));
    CHECK(cell.detection_rate >= 0.0);
    CHECK(cell.detection_rate <= 1.0);
    CHECK(cell.n_instances == 8);
  }
}

TEST_CASE("sweep output does not depend on the parallelism level") {
  const Fixture fx = make_fixture();
  const SweepArena arena = make_sweep_arena(fx, 29);
  const std::vector<double> targets = {0.6, 0.8};
  const SweepResult serial = run_sensitivity_sweep(
      targets, {"lime", "shap"}, arena, fx.data, fx.setup, 8, 31, 0.02, 1);
  const SweepResult threaded = run_sensitivity_sweep(
      targets, {"lime", "shap"}, arena, fx.data, fx.setup, 8, 31, 0.02, 4);

  REQUIRE(serial.cells.size() == threaded.cells.size());
  for (std::size_t c = 0; c < serial.cells.size(); ++c) {
    CHECK(serial.cells[c].f1_achieved == threaded.cells[c].f1_achieved);
    CHECK(serial.cells[c].detection_rate == threaded.cells[c].detection_rate);
    CHECK(serial.cells[c].error == threaded.cells[c].error);
  }
  REQUIRE(serial.records.size() == threaded.records.size());
  for (std::size_t i = 0; i < serial.records.size(); ++i) {
    CHECK(serial.records[i].instance_id == threaded.records[i].instance_id);
    CHECK(serial.records[i].attribution.weights ==
          threaded.records[i].attribution.weights);
  }
}

TEST_CASE("sweep validates targets and isolates per-cell failures") {
  const Fixture fx = make_fixture();
  const SweepArena arena = make_sweep_arena(fx, 29);
  CHECK_THROWS_AS((void)run_sensitivity_sweep({}, {"lime"}, arena, fx.data,
                                              fx.setup, 5, 1),
                  Error);
  CHECK_THROWS_WITH_AS(
      (void)run_sensitivity_sweep({0.8, 0.6}, {"lime"}, arena, fx.data,
                                  fx.setup, 5, 1),
      doctest::Contains("strictly ascending"), Error);

  const SweepResult result = run_sensitivity_sweep(
      {0.7}, {"lime", "gradient"}, arena, fx.data, fx.setup, 5, 37);
  REQUIRE(result.cells.size() == 2);
  CHECK(result.cells[0].error.empty());
  CHECK(result.cells[1].error.find("unknown explainer tag") !=
        std::string::npos);
  CHECK(result.records.size() == 5);
}

namespace {

Dataset correlated_pair(std::size_t n, std::uint64_t seed) {
  Dataset d;
  d.schema.features.push_back({"u", FeatureKind::kContinuous, {}});
  d.schema.features.push_back({"v", FeatureKind::kContinuous, {}});
  d.x = Matrix(n, 2, 0.0);
  d.labels.assign(n, 0);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = rng.normal();
    d.x(i, 0) = t;
    d.x(i, 1) = 2.0 * t + 1.0;
    d.labels[i] = i % 2 == 0 ? 1 : 0;
  }
  return d;
}

}  // namespace

TEST_CASE("pca layout marks real rows first and perturbations after") {
  const Dataset real = correlated_pair(40, 43);
  const PcaProjection proj = run_pca(real, PerturbMode::kLime, 3, 47);
  REQUIRE(proj.coords.rows == 40 * 4);
  REQUIRE(proj.is_perturbed.size() == 40 * 4);
  for (std::size_t i = 0; i < 40; ++i) CHECK(proj.is_perturbed[i] == 0);
  std::size_t perturbed = 0;
  for (const int flag : proj.is_perturbed) perturbed += flag;
  CHECK(perturbed == 40 * 3);
}

TEST_CASE("pca components are orthonormal and ordered by variance") {
  const Dataset real = correlated_pair(200, 53);
  const PcaProjection proj = run_pca(real, PerturbMode::kLime, 3, 59);
  CHECK(norm2(proj.component1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(norm2(proj.component2) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(dot(proj.component1, proj.component2)) < 1e-9);
  CHECK(proj.ev1 >= proj.ev2);
  CHECK(proj.ev2 > 0.0);
  // Two features means the two components explain everything.
  CHECK(proj.ev1 + proj.ev2 == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("pca finds the diagonal of perfectly correlated standardized data") {
  const Dataset real = correlated_pair(200, 61);
  const PcaProjection proj = run_pca(real, PerturbMode::kLime, 3, 67);
  // Real rows standardize to identical coordinates while perturbation noise
  // is symmetric, so the leading direction is the diagonal and the second
  // the anti-diagonal.
  CHECK(std::abs(proj.component1[0] - proj.component1[1]) < 0.15);
  CHECK(proj.component1[0] * proj.component1[1] > 0.0);
  CHECK(proj.component2[0] * proj.component2[1] < 0.0);
  CHECK(proj.ev1 > proj.ev2 + 0.1);
}

TEST_CASE("pca is deterministic and validates its inputs") {
  const Dataset real = correlated_pair(30, 71);
  const PcaProjection a = run_pca(real, PerturbMode::kShap, 2, 73);
  const PcaProjection b = run_pca(real, PerturbMode::kShap, 2, 73);
  CHECK(a.coords.data == b.coords.data);
  CHECK(a.component1 == b.component1);
  const PcaProjection c = run_pca(real, PerturbMode::kShap, 2, 74);
  CHECK(a.coords.data != c.coords.data);

  CHECK_THROWS_AS((void)run_pca(correlated_pair(2, 1), PerturbMode::kLime, 3,
                                1),
                  Error);
  CHECK_THROWS_AS((void)run_pca(real, PerturbMode::kLime, 0, 1), Error);
}

TEST_CASE("top3 report renders summary and per-instance CSVs") {
  const Fixture fx = make_fixture();
  const Top3Report report = run_top3({{"biased_rule", fx.f}}, {"lime", "shlime"},
                                     fx.data, fx.setup, 12, 79);
  ReportContext ctx{fx.data.schema, "signed_product"};
  const std::string dir = temp_dir("top3");
  const auto files = emit_report(report, ctx, dir);
  REQUIRE(files == std::vector<std::string>{"top3.csv", "attributions.csv"});

  const std::string top3 = read_text_file(dir + "/top3.csv");
  CHECK(top3.rfind("classifier_tag,explainer_tag,feature_name,top3_fraction\n",
                   0) == 0);
  const std::string attr = read_text_file(dir + "/attributions.csv");
  CHECK(attr.rfind("instance_id,classifier_tag,explainer_tag,sign_policy,"
                   "feature_name,rank,phi\n",
                   0) == 0);
  CHECK(attr.find(",shlime,signed_product,") != std::string::npos);
  CHECK(attr.find("(intercept)") != std::string::npos);

  const std::string dir2 = temp_dir("top3_again");
  emit_report(report, ctx, dir2);
  CHECK(read_text_file(dir2 + "/top3.csv") == top3);
  CHECK(read_text_file(dir2 + "/attributions.csv") == attr);
}

TEST_CASE("summary fractions can be rebuilt from the attribution CSV alone") {
  const Fixture fx = make_fixture();
  const Top3Report report = run_top3({{"biased_rule", fx.f}}, {"lime", "shap"},
                                     fx.data, fx.setup, 15, 83);
  ReportContext ctx{fx.data.schema, "signed_product"};
  const std::string dir = temp_dir("recompute");
  emit_report(report, ctx, dir);

  // Tally rank <= 2 rows per (classifier, explainer, feature).
  std::map<std::string, double> tallies;
  std::map<std::string, std::size_t> instances;
  std::string attr = read_text_file(dir + "/attributions.csv");
  std::size_t pos = attr.find('\n') + 1;
  while (pos < attr.size()) {
    const std::size_t end = attr.find('\n', pos);
    const auto fields = split_csv_line(attr.substr(pos, end - pos));
    pos = end + 1;
    REQUIRE(fields.size() == 7);
    const std::string key = fields[1] + "," + fields[2];
    if (fields[4] == "(intercept)") {
      instances[key] += 1;
      continue;
    }
    if (fields[5] == "0" || fields[5] == "1" || fields[5] == "2")
      tallies[key + "," + fields[4]] += 1.0;
  }

  std::size_t checked = 0;
  const std::string top3 = read_text_file(dir + "/top3.csv");
  pos = top3.find('\n') + 1;
  while (pos < top3.size()) {
    const std::size_t end = top3.find('\n', pos);
    const auto fields = split_csv_line(top3.substr(pos, end - pos));
    pos = end + 1;
    REQUIRE(fields.size() == 4);
    const std::string key = fields[0] + "," + fields[1];
    const double expected =
        tallies[key + "," + fields[2]] / static_cast<double>(instances[key]);
    CHECK(std::strtod(fields[3].c_str(), nullptr) ==
          doctest::Approx(expected).epsilon(1e-12));
    ++checked;
  }
  CHECK(checked == 2 * fx.data.n_features());
}

TEST_CASE("sweep report keeps only completed cells in the summary CSV") {
  const Fixture fx = make_fixture();
  const SweepArena arena = make_sweep_arena(fx, 29);
  const SweepResult result = run_sensitivity_sweep(
      {0.7}, {"lime", "gradient"}, arena, fx.data, fx.setup, 5, 89);
  ReportContext ctx{fx.data.schema, "signed_product"};
  const std::string dir = temp_dir("sweep");
  const auto files = emit_report(result, ctx, dir);
  REQUIRE(files == std::vector<std::string>{"sweep.csv", "attributions.csv"});

  const std::string sweep = read_text_file(dir + "/sweep.csv");
  CHECK(sweep.rfind(
            "f1_target,f1_achieved,explainer_tag,detection_rate,n_instances\n",
            0) == 0);
  CHECK(sweep.find("lime") != std::string::npos);
  CHECK(sweep.find("gradient") == std::string::npos);
  CHECK(sweep.find("0.7,") == sweep.find('\n') + 1);
}

TEST_CASE("pca report labels real and perturbed points") {
  const Dataset real = correlated_pair(10, 97);
  const PcaProjection proj = run_pca(real, PerturbMode::kLime, 2, 101);
  const std::string dir = temp_dir("pca");
  const auto files = emit_report(proj, dir);
  REQUIRE(files == std::vector<std::string>{"pca.csv", "pca_meta.csv"});

  const std::string pca = read_text_file(dir + "/pca.csv");
  CHECK(pca.rfind("point_id,pc1,pc2,label\n", 0) == 0);
  std::size_t real_rows = 0, perturbed_rows = 0, pos = pca.find('\n') + 1;
  while (pos < pca.size()) {
    const std::size_t end = pca.find('\n', pos);
    const auto fields = split_csv_line(pca.substr(pos, end - pos));
    pos = end + 1;
    REQUIRE(fields.size() == 4);
    if (fields[3] == "real") ++real_rows;
    if (fields[3] == "perturbed") ++perturbed_rows;
  }
  CHECK(real_rows == 10);
  CHECK(perturbed_rows == 20);

  const std::string meta = read_text_file(dir + "/pca_meta.csv");
  CHECK(meta.rfind("ev1,ev2\n", 0) == 0);
  const auto fields = split_csv_line(meta.substr(meta.find('\n') + 1,
                                                 meta.find('\n', 8) - 8));
  REQUIRE(fields.size() == 2);
  CHECK(std::strtod(fields[0].c_str(), nullptr) ==
        doctest::Approx(proj.ev1).epsilon(1e-12));
}
