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

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "faceid/classifiers/gallery.h"
#include "faceid/classifiers/score_set.h"

namespace faceid {

// Scaled conjugate gradient constants follow Moller (1993):
// sigma scales the finite-difference step for the curvature estimate and
// lambda_init seeds the Levenberg-Marquardt style regularizer.
struct MlpConfig {
  int hidden = 40;
  int epochs = 15000;
  double gamma = 0.9;  // MSEREG mix: gamma * MSE + (1 - gamma) * msw
  std::uint64_t seed = 1;
  double grad_tol = 1e-10;
  double sigma = 5e-5;
  double lambda_init = 5e-7;
  Normalization normalization = Normalization::kZScore;
};

// dim -> hidden (tanh) -> subjects (tanh).
struct MlpModel {
  MlpConfig config;
  std::vector<int> subjects;
  FeatureScaler scaler;
  Eigen::MatrixXd w1;  // hidden x dim
  Eigen::VectorXd b1;
  Eigen::MatrixXd w2;  // outputs x hidden
  Eigen::VectorXd b2;

  Eigen::Index input_dim() const { return w1.cols(); }
  Eigen::Index parameter_count() const;

  // Flat layout: w1 (column-major), b1, w2 (column-major), b2.
  Eigen::VectorXd parameters() const;
  void set_parameters(const Eigen::VectorXd& flat);

  // Outputs for an already-scaled input.
  Eigen::VectorXd forward(const Eigen::VectorXd& scaled) const;
};

// Scaled inputs (N x dim, one sample per row) with +/-1 targets (N x S).
struct MlpBatch {
  Eigen::MatrixXd inputs;
  Eigen::MatrixXd targets;
};

MlpBatch make_batch(const Gallery& gallery, const FeatureScaler& scaler);

// Untrained model with seeded uniform weights in
// [-0.5, 0.5] / sqrt(fan_in).
MlpModel mlp_init(const Gallery& gallery, const MlpConfig& config);

// MSEREG = gamma * mean((t - a)^2) + (1 - gamma) * mean(w^2), where the
// first mean runs over all N x S outputs and the second over all n weights
// and biases.
double mlp_loss(const MlpModel& model, const MlpBatch& batch, double gamma);

// Analytic gradient of mlp_loss in the parameters() layout.
Eigen::VectorXd mlp_gradient(const MlpModel& model, const MlpBatch& batch,
                             double gamma);

struct MlpTrainingLog {
  std::vector<double> loss;  // entry e is the loss after epoch e
  int epochs_run = 0;
  bool converged = false;  // gradient norm fell below grad_tol
};

// Full-batch scaled conjugate gradient, one iteration per epoch. Throws
// DivergenceError when the loss becomes non-finite.
MlpModel mlp_train(const Gallery& gallery, const MlpConfig& config,
                   MlpTrainingLog* log = nullptr);
MlpModel mlp_train(MlpModel initial, const MlpBatch& batch,
                   MlpTrainingLog* log = nullptr);

ScoreSet mlp_scores(const MlpModel& model, const FeatureVector& probe);
Classification mlp_classify(const MlpModel& model, const FeatureVector& probe);

}  // namespace faceid
