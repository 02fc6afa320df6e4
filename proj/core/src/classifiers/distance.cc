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

#include "faceid/classifiers/distance.h"

#include <cmath>

#include <fmt/format.h>

#include "faceid/error.h"

namespace faceid {
namespace {

void require_same_dim(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size()) {
    throw ArgumentError(fmt::format("distance between vectors of dim {} and {}",
                                    x.size(), y.size()));
  }
}

}  // namespace

// Sequential left-to-right sums keep results independent of vectorization.
double mad(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  require_same_dim(x, y);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) sum += std::abs(x(i) - y(i));
  return sum;
}

double mad(const FeatureVector& x, const FeatureVector& y) {
  return mad(x.coeffs, y.coeffs);
}

double mse_dist(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  require_same_dim(x, y);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double d = x(i) - y(i);
    sum += d * d;
  }
  return sum;
}

double mse_dist(const FeatureVector& x, const FeatureVector& y) {
  return mse_dist(x.coeffs, y.coeffs);
}

}  // namespace faceid
