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

#include "xailab/ood_detector.hpp"

#include <cmath>
#include <utility>

#include "xailab/error.hpp"
#include "xailab/metrics.hpp"
#include "xailab/rng.hpp"

namespace xailab {

namespace {

double flip_coin(const Vector& row, std::uint64_t noise_seed) {
  const std::uint64_t h = splitmix64(
      fnv1a64(row.data(), row.size() * sizeof(double)) ^ noise_seed);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

ClassificationMetrics flip_metrics(const std::vector<int>& base,
                                   const std::vector<double>& coins,
                                   const std::vector<int>& labels,
                                   double rho) {
  std::vector<int> pred(base.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    pred[i] = coins[i] < rho ? 1 - base[i] : base[i];
  return compute_metrics(pred, labels);
}

}  // namespace

OODDetector::OODDetector(ModelPtr model, double tau, double measured_f1,
                         std::string learner_name, double rho_flip,
                         std::uint64_t noise_seed)
    : model_(std::move(model)),
      tau_(tau),
      measured_f1_(measured_f1),
      learner_name_(std::move(learner_name)),
      rho_flip_(rho_flip),
      noise_seed_(noise_seed) {
  if (!model_) throw Error("adversarial", "detector needs a model");
  if (!(tau > 0.0 && tau < 1.0))
    throw Error("adversarial", "tau must lie in (0, 1)");
  if (!(rho_flip >= 0.0 && rho_flip < 1.0))
    throw Error("adversarial", "rho_flip must lie in [0, 1)");
}

bool OODDetector::is_ood(const Vector& row) const {
  const bool base = model_->proba1(row) >= tau_;
  if (rho_flip_ == 0.0) return base;
  return flip_coin(row, noise_seed_) < rho_flip_ ? !base : base;
}

OODDetector train_ood_detector(const Dataset& x, PerturbMode mode,
                               DetectorLearner learner,
                               const DetectorHyper& hyper,
                               std::uint64_t seed) {
  if (x.n_rows() == 0) throw Error("adversarial", "empty dataset");
  const Dataset ood_set =
      build_ood_training_set(x, mode, hyper.n_per_instance,
                             Rng::derive(seed, "ood-set"), hyper.background);
  const TrainTestSplit split = split_dataset(ood_set, hyper.holdout_fraction,
                                             Rng::derive(seed, "ood-holdout"));
  ModelPtr model;
  std::string learner_name;
  if (learner == DetectorLearner::kForest) {
    ForestHyper fh = hyper.forest;
    fh.seed = Rng::derive(seed, "ood-learner");
    model = train_forest(split.train, fh);
    learner_name = "forest";
  } else {
    model = train_logistic(split.train, hyper.logistic);
    learner_name = "logistic";
  }
  OODDetector detector(model, hyper.tau, 0.0, learner_name);
  const double f1 = detector_f1(detector, split.test);
  return OODDetector(model, hyper.tau, f1, learner_name);
}

double detector_f1(const OODDetector& detector, const Dataset& eval) {
  if (eval.n_rows() == 0) throw Error("adversarial", "empty eval dataset");
  std::vector<int> pred(eval.n_rows());
  for (std::size_t i = 0; i < eval.n_rows(); ++i)
    pred[i] = detector.is_ood(eval.x.row(i)) ? 1 : 0;
  return compute_metrics(pred, eval.labels).f1;
}

OODDetector degrade_detector(const OODDetector& detector, double target_f1,
                             const Dataset& eval, double tolerance,
                             std::uint64_t seed) {
  if (!(target_f1 > 0.0 && target_f1 <= 1.0))
    throw Error("adversarial", "target_f1 must lie in (0, 1]");
  if (!(tolerance > 0.0))
    throw Error("adversarial", "tolerance must be positive");
  if (eval.n_rows() == 0) throw Error("adversarial", "empty eval dataset");

  std::vector<int> base(eval.n_rows());
  std::vector<double> coins(eval.n_rows());
  for (std::size_t i = 0; i < eval.n_rows(); ++i) {
    const Vector row = eval.x.row(i);
    base[i] = detector.proba(row) >= detector.tau() ? 1 : 0;
    coins[i] = flip_coin(row, seed);
  }

  const double base_f1 = flip_metrics(base, coins, eval.labels, 0.0).f1;
  if (target_f1 > base_f1 + tolerance)
    throw Error("adversarial",
                "target F1 " + std::to_string(target_f1) +
                    " above achievable F1 " + std::to_string(base_f1));
  if (std::abs(base_f1 - target_f1) <= tolerance)
    return OODDetector(detector.model(), detector.tau(), base_f1,
                       detector.learner_name(), 0.0, seed);

  double lo = 0.0, hi = 0.5;
  for (int step = 0; step < 50; ++step) {
    const double mid = 0.5 * (lo + hi);
    const double f1 = flip_metrics(base, coins, eval.labels, mid).f1;
    if (std::abs(f1 - target_f1) <= tolerance)
      return OODDetector(detector.model(), detector.tau(), f1,
                         detector.learner_name(), mid, seed);
    if (f1 > target_f1)
      lo = mid;
    else
      hi = mid;
  }
  throw Error("adversarial",
              "flip-rate bisection did not converge to target F1 " +
                  std::to_string(target_f1) + " within 50 steps");
}

}  // namespace xailab
