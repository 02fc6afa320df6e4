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
#include <vector>

#include <Eigen/Core>

#include "faceid/transforms.h"

namespace faceid {

// Input scaling applied before the neural classifiers.
//   kNone      raw coefficients
//   kZScore    (x - mean) / std per dimension
//   kZScoreRms z-score further divided by sqrt(dim), so the expected squared
//              distance between two independent vectors is about 2 whatever
//              the dimension; radial-basis spreads stay on a fixed scale.
enum class Normalization { kNone, kZScore, kZScoreRms };

std::string_view to_string(Normalization mode);
Normalization parse_normalization(std::string_view name);

inline constexpr double kStdFloor = 1e-8;

struct FeatureScaler {
  Normalization mode = Normalization::kNone;
  Eigen::VectorXd offset;
  Eigen::VectorXd scale;  // multiplier, 1/(std*sqrt(dim)) etc.

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

// Labelled training vectors of uniform dimension.
class Gallery {
 public:
  explicit Gallery(std::vector<FeatureVector> vectors);

  const std::vector<FeatureVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  Eigen::Index dim() const { return data_.cols(); }

  // N x dim, one raw vector per row.
  const Eigen::MatrixXd& data() const { return data_; }
  const std::vector<int>& labels() const { return labels_; }
  // Ascending distinct labels.
  const std::vector<int>& subjects() const { return subjects_; }
  std::size_t subject_index(int subject) const;

  // Population mean and std per dimension, std floored at kStdFloor.
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::VectorXd& stddev() const { return stddev_; }

  FeatureScaler scaler(Normalization mode) const;
  // data() with the scaler applied to every row.
  Eigen::MatrixXd normalized(const FeatureScaler& scaler) const;

 private:
  std::vector<FeatureVector> vectors_;
  Eigen::MatrixXd data_;
  std::vector<int> labels_;
  std::vector<int> subjects_;
  Eigen::VectorXd mean_;
  Eigen::VectorXd stddev_;
};

// +1 for the own subject, -1 elsewhere; N x S.
Eigen::MatrixXd one_vs_all_targets(const Gallery& gallery);

}  // namespace faceid
