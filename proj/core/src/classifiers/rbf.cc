// Copyright 2026 The faceid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "faceid/classifiers/rbf.h"

#include <cmath>

#include <Eigen/QR>
#include <fmt/format.h>

#include "faceid/error.h"

namespace faceid {

RbfModel rbf_train(const Gallery& gallery, double spread, int max_centers,
                   Normalization normalization) {
  if (!(spread > 0.0)) throw ArgumentError("RBF spread must be > 0");
  const auto n = static_cast<Eigen::Index>(gallery.size());
  if (max_centers < 1 || max_centers > n) {
    throw ArgumentError(fmt::format("max_centers must lie in [1, {}], got {}", n,
                                    max_centers));
  }

  RbfModel m;
  m.scaler = gallery.scaler(normalization);
  m.spread = spread;
  m.subjects = gallery.subjects();
  const Eigen::MatrixXd x = gallery.normalized(m.scaler);
  const Eigen::MatrixXd targets = one_vs_all_targets(gallery);
  const double b2 = std::pow(radbas_bias(spread), 2);

  // activation(i, j): response of a unit centred on vector j to vector i.
  Eigen::MatrixXd activation(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      activation(i, j) = std::exp(-b2 * (x.row(i) - x.row(j)).squaredNorm());
    }
  }

  // Bias-only network: the least-squares output is the column mean.
  Eigen::MatrixXd outputs = targets.colwise().mean().replicate(n, 1);
  Eigen::MatrixXd solution;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  Eigen::MatrixXd design(n, 1);
  design.col(0).setOnes();

  for (int k = 0; k < max_centers; ++k) {
    const Eigen::VectorXd errors = (targets - outputs).rowwise().squaredNorm();
    Eigen::Index pick = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      if (pick < 0 || errors(i) > errors(pick)) pick = i;
    }
    used[static_cast<std::size_t>(pick)] = true;
    m.center_indices.push_back(static_cast<int>(pick));

    // Columns: centers in order of addition, bias last.
    Eigen::MatrixXd next(n, k + 2);
    next.leftCols(k) = design.leftCols(k);
    next.col(k) = activation.col(pick);
    next.col(k + 1).setOnes();
    design = std::move(next);

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);
    solution = cod.solve(targets);
    outputs = design * solution;
    m.residuals.push_back((targets - outputs).squaredNorm());
  }

  const auto k = static_cast<Eigen::Index>(m.center_indices.size());
  m.centers.resize(k, x.cols());
  for (Eigen::Index c = 0; c < k; ++c) {
    m.centers.row(c) = x.row(m.center_indices[static_cast<std::size_t>(c)]);
  }
  m.weights = solution.topRows(k).transpose();
  m.bias = solution.row(k).transpose();
  return m;
}

Eigen::VectorXd rbf_activations(const RbfModel& model,
                                const Eigen::VectorXd& scaled) {
  if (scaled.size() != model.centers.cols()) {
    throw ArgumentError(fmt::format("input has dim {}, RBF expects {}",
                                    scaled.size(), model.centers.cols()));
  }
  const double b2 = std::pow(radbas_bias(model.spread), 2);
  Eigen::VectorXd a(model.centers.rows());
  for (Eigen::Index c = 0; c < model.centers.rows(); ++c) {
    a(c) = std::exp(-b2 * (model.centers.row(c).transpose() - scaled).squaredNorm());
  }
  return a;
}

ScoreSet rbf_scores(const RbfModel& model, const FeatureVector& probe) {
  const Eigen::VectorXd a = rbf_activations(model, model.scaler.apply(probe.coeffs));
  const Eigen::VectorXd out = model.weights * a + model.bias;
  ScoreSet s;
  s.subjects = model.subjects;
  s.scores.assign(out.data(), out.data() + out.size());
  s.polarity = Polarity::kHigherIsBetter;
  s.classifier_id = "rbf";
  return s;
}

Classification rbf_classify(const RbfModel& model, const FeatureVector& probe) {
  Classification c;
  c.scores = rbf_scores(model, probe);
  c.subject = c.scores.best_subject();
  return c;
}

}  // namespace faceid
