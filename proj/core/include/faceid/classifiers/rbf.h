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

#include <vector>

#include <Eigen/Core>

#include "faceid/classifiers/gallery.h"
#include "faceid/classifiers/pnn.h"
#include "faceid/classifiers/score_set.h"

namespace faceid {

// Radial layer with incrementally chosen centers feeding a linear layer.
struct RbfModel {
  FeatureScaler scaler;
  double spread = 1.0;
  std::vector<int> subjects;
  std::vector<int> center_indices;  // gallery rows, in order of addition
  Eigen::MatrixXd centers;          // k x dim, scaled
  Eigen::MatrixXd weights;          // S x k
  Eigen::VectorXd bias;             // S
  // Sum of squared training errors after each added center.
  std::vector<double> residuals;
};

// Greedy design loop:
//   1. simulate the current network on every gallery vector,
//   2. pick the unused vector with the largest summed squared error
//      (lowest index on ties),
//   3. add a radial unit centred on it,
//   4. refit the linear layer (weights and bias) by minimum-norm least
//      squares against +/-1 targets.
// The loop starts from a bias-only linear layer and stops at max_centers.
RbfModel rbf_train(const Gallery& gallery, double spread, int max_centers,
                   Normalization normalization = kDefaultRadialNormalization);

// Radial activations of an already-scaled input.
Eigen::VectorXd rbf_activations(const RbfModel& model,
                                const Eigen::VectorXd& scaled);

ScoreSet rbf_scores(const RbfModel& model, const FeatureVector& probe);
Classification rbf_classify(const RbfModel& model, const FeatureVector& probe);

}  // namespace faceid
