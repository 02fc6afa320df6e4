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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "faceid/classifiers/gallery.h"
#include "faceid/classifiers/mlp.h"
#include "faceid/classifiers/nn.h"
#include "faceid/classifiers/score_set.h"
#include "faceid/fusion.h"

namespace faceid {

// Parsed form of "nn:mad", "nn:mse", "mlp", "pnn", "rbf" and
// "fusion:<a>+<b>+..." (e.g. "fusion:rbf+nn:mad").
struct ClassifierSpec {
  enum class Kind { kNearestNeighbor, kMlp, kPnn, kRbf, kFusion };

  Kind kind = Kind::kNearestNeighbor;
  Metric metric = Metric::kMad;
  std::vector<ClassifierSpec> members;

  static ClassifierSpec parse(std::string_view text);
  std::string to_string() const;
};

struct ClassifierOptions {
  MlpConfig mlp;
  double pnn_spread = 0.85;
  double rbf_spread = 0.85;
  int rbf_max_centers = 100;
  Normalization radial_normalization = Normalization::kZScoreRms;
  ScoreNormalization fusion_normalization = ScoreNormalization::kMinMax;
};

// A trained classifier. classify() is const and safe to call concurrently.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual Classification classify(const FeatureVector& probe) const = 0;
  virtual std::string id() const = 0;
};

// Trains (or, for NN and PNN, simply builds) the classifier described by
// spec. MLP training writes its curve into mlp_log when given.
std::unique_ptr<Classifier> make_classifier(const ClassifierSpec& spec,
                                            const Gallery& gallery,
                                            const ClassifierOptions& options,
                                            MlpTrainingLog* mlp_log = nullptr);

}  // namespace faceid
