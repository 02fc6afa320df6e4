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

#include <span>

#include "faceid/transforms.h"

namespace faceid {

// Sum of absolute differences; no averaging.
double mad(const FeatureVector& x, const FeatureVector& y);
double mad(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Sum of squared differences; no averaging.
double mse_dist(const FeatureVector& x, const FeatureVector& y);
double mse_dist(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

}  // namespace faceid
