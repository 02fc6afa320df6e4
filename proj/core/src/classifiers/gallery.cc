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

#include "faceid/classifiers/gallery.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "faceid/error.h"

namespace faceid {

std::string_view to_string(Normalization mode) {
  switch (mode) {
    case Normalization::kNone: return "none";
    case Normalization::kZScore: return "zscore";
    case Normalization::kZScoreRms: return "zscore-rms";
  }
  return "?";
}

Normalization parse_normalization(std::string_view name) {
  if (name == "none") return Normalization::kNone;
  if (name == "zscore") return Normalization::kZScore;
  if (name == "zscore-rms") return Normalization::kZScoreRms;
  throw ArgumentError(fmt::format("unknown normalization '{}'", name));
}

Eigen::VectorXd FeatureScaler::apply(const Eigen::VectorXd& x) const {
  if (x.size() != offset.size()) {
    throw ArgumentError(fmt::format("probe has dim {}, model expects {}",
                                    x.size(), offset.size()));
  }
  return (x - offset).cwiseProduct(scale);
}

Gallery::Gallery(std::vector<FeatureVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw ArgumentError("gallery is empty");
  const Eigen::Index dim = vectors_.front().dim();
  if (dim < 1) throw ArgumentError("gallery vectors must have dim >= 1");
  data_.resize(static_cast<Eigen::Index>(vectors_.size()), dim);
  labels_.reserve(vectors_.size());
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const auto& v = vectors_[i];
    if (!v.label) throw ArgumentError("gallery vectors must be labelled");
    if (v.dim() != dim) {
      throw ArgumentError(fmt::format("gallery vector {} has dim {}, expected {}",
                                      i, v.dim(), dim));
    }
    if (!v.coeffs.allFinite()) throw ArgumentError("gallery vector is not finite");
    data_.row(static_cast<Eigen::Index>(i)) = v.coeffs.transpose();
    labels_.push_back(*v.label);
  }
  subjects_ = labels_;
  std::sort(subjects_.begin(), subjects_.end());
  subjects_.erase(std::unique(subjects_.begin(), subjects_.end()), subjects_.end());

  mean_ = data_.colwise().mean().transpose();
  const Eigen::MatrixXd centred = data_.rowwise() - mean_.transpose();
  stddev_ = (centred.colwise().squaredNorm().transpose() /
             static_cast<double>(data_.rows()))
                .cwiseSqrt()
                .cwiseMax(kStdFloor);
}

std::size_t Gallery::subject_index(int subject) const {
  const auto it = std::lower_bound(subjects_.begin(), subjects_.end(), subject);
  if (it == subjects_.end() || *it != subject) {
    throw ArgumentError(fmt::format("subject {} is not enrolled", subject));
  }
  return static_cast<std::size_t>(it - subjects_.begin());
}

FeatureScaler Gallery::scaler(Normalization mode) const {
  FeatureScaler s;
  s.mode = mode;
  switch (mode) {
    case Normalization::kNone:
      s.offset = Eigen::VectorXd::Zero(dim());
      s.scale = Eigen::VectorXd::Ones(dim());
      break;
    case Normalization::kZScore:
      s.offset = mean_;
      s.scale = stddev_.cwiseInverse();
      break;
    case Normalization::kZScoreRms:
      s.offset = mean_;
      s.scale = stddev_.cwiseInverse() / std::sqrt(static_cast<double>(dim()));
      break;
  }
  return s;
}

Eigen::MatrixXd Gallery::normalized(const FeatureScaler& scaler) const {
  Eigen::MatrixXd out = data_.rowwise() - scaler.offset.transpose();
  return out.array().rowwise() * scaler.scale.transpose().array();
}

Eigen::MatrixXd one_vs_all_targets(const Gallery& gallery) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Constant(
      static_cast<Eigen::Index>(gallery.size()),
      static_cast<Eigen::Index>(gallery.subjects().size()), -1.0);
  for (std::size_t i = 0; i < gallery.size(); ++i) {
    t(static_cast<Eigen::Index>(i),
      static_cast<Eigen::Index>(gallery.subject_index(gallery.labels()[i]))) = 1.0;
  }
  return t;
}

}  // namespace faceid
