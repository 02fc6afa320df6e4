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
#include "faceid/classifiers/score_set.h"

namespace faceid {

// radbas(z) = exp(-z^2).
double radbas(double z);

// Bias b with radbas(spread * b) = 0.5, i.e. sqrt(ln 2) / spread.
double radbas_bias(double spread);

inline constexpr Normalization kDefaultRadialNormalization =
    Normalization::kZScoreRms;

// One radial unit per gallery vector, summed per class.
struct PnnModel {
  FeatureScaler scaler;
  Eigen::MatrixXd centers;  // N x dim, scaled
  std::vector<int> labels;
  std::vector<int> subjects;
  double spread = 0.1;
};

PnnModel pnn_build(const Gallery& gallery, double spread,
                   Normalization normalization = kDefaultRadialNormalization);

// Class scores are the summed activations normalized to sum 1. If every
// activation underflows to zero, the result falls back to the Euclidean
// nearest neighbour: a one-hot score on its subject.
Classification pnn_classify(const PnnModel& model, const FeatureVector& probe);

}  // namespace faceid
