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

#include <string_view>

#include "faceid/classifiers/gallery.h"
#include "faceid/classifiers/score_set.h"

namespace faceid {

enum class Metric { kMad, kMse };

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view name);

// Distance from the probe to every gallery vector, in gallery order.
Eigen::VectorXd model_distances(const FeatureVector& probe,
                                const Gallery& gallery, Metric metric);

// Per-subject score is the smallest distance to any of that subject's
// models. Works on raw features.
Classification nn_classify(const FeatureVector& probe, const Gallery& gallery,
                           Metric metric);

}  // namespace faceid
