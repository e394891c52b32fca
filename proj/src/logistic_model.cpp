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

#include "xailab/logistic_model.hpp"

#include <cmath>
#include <utility>

#include "xailab/error.hpp"

namespace xailab {

namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double cross_entropy(double p, int y) {
  constexpr double kEps = 1e-12;
  const double q = std::min(1.0 - kEps, std::max(kEps, p));
  return y == 1 ? -std::log(q) : -std::log(1.0 - q);
}

}  // namespace

LogisticModel::LogisticModel(Vector weights, double bias, Vector means,
                             Vector stds, LogisticHyper hyper,
                             Vector loss_trace)
    : weights_(std::move(weights)),
      bias_(bias),
      means_(std::move(means)),
      stds_(std::move(stds)),
      hyper_(hyper),
      loss_trace_(std::move(loss_trace)) {}

std::array<double, 2> LogisticModel::predict_proba(const Vector& row) const {
  if (row.size() != weights_.size())
    throw Error("models", "row width does not match logistic model");
  double z = bias_;
  for (std::size_t j = 0; j < row.size(); ++j)
    z += weights_[j] * (row[j] - means_[j]) / stds_[j];
  const double p1 = sigmoid(z);
  return {1.0 - p1, p1};
}

ModelPtr train_logistic(const Dataset& train, const LogisticHyper& hyper) {
  train.validate();
  const std::size_t n = train.n_rows();
  const std::size_t m = train.n_features();
  if (n < 2) throw Error("models", "train_logistic needs >= 2 rows");
  bool has0 = false, has1 = false;
  for (int y : train.labels) (y == 1 ? has1 : has0) = true;
  if (!has0 || !has1)
    throw Error("models", "train_logistic needs both classes present");
  if (!(hyper.learning_rate > 0.0))
    throw Error("models", "learning rate must be positive");
  if (hyper.l2 < 0.0) throw Error("models", "l2 strength must be >= 0");

  Vector means(m, 0.0), stds(m, 1.0);
  for (std::size_t j = 0; j < m; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += train.x(i, j);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = train.x(i, j) - mean;
      var += d * d;
    }
    var /= static_cast<double>(n);
    means[j] = mean;
    stds[j] = var > 0.0 ? std::sqrt(var) : 1.0;
  }

  Matrix xs(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      xs(i, j) = (train.x(i, j) - means[j]) / stds[j];

  Vector w(m, 0.0);
  double b = 0.0;
  Vector trace;
  Vector p(n, 0.0);

  auto forward = [&]() {
    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double z = b;
      for (std::size_t j = 0; j < m; ++j) z += w[j] * xs(i, j);
      p[i] = sigmoid(z);
      loss += cross_entropy(p[i], train.labels[i]);
    }
    loss /= static_cast<double>(n);
    double reg = 0.0;
    for (double wj : w) reg += wj * wj;
    return loss + 0.5 * hyper.l2 * reg;
  };

  trace.push_back(forward());
  for (std::size_t epoch = 0; epoch < hyper.epochs; ++epoch) {
    Vector grad(m, 0.0);
    double grad_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = p[i] - static_cast<double>(train.labels[i]);
      grad_b += r;
      for (std::size_t j = 0; j < m; ++j) grad[j] += r * xs(i, j);
    }
    for (std::size_t j = 0; j < m; ++j) {
      grad[j] = grad[j] / static_cast<double>(n) + hyper.l2 * w[j];
      w[j] -= hyper.learning_rate * grad[j];
    }
    b -= hyper.learning_rate * grad_b / static_cast<double>(n);
    trace.push_back(forward());
  }

  return std::make_shared<LogisticModel>(std::move(w), b, std::move(means),
                                         std::move(stds), hyper,
                                         std::move(trace));
}

}  // namespace xailab
