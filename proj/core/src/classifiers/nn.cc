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

#include "faceid/classifiers/nn.h"

#include <limits>

#include <fmt/format.h>

#include "faceid/classifiers/distance.h"
#include "faceid/error.h"

namespace faceid {

std::string_view to_string(Metric metric) {
  return metric == Metric::kMad ? "mad" : "mse";
}

Metric parse_metric(std::string_view name) {
  if (name == "mad") return Metric::kMad;
  if (name == "mse") return Metric::kMse;
  throw ArgumentError(fmt::format("unknown metric '{}'", name));
}

Eigen::VectorXd model_distances(const FeatureVector& probe,
                                const Gallery& gallery, Metric metric) {
  if (probe.dim() != gallery.dim()) {
    throw ArgumentError(fmt::format("probe has dim {}, gallery has dim {}",
                                    probe.dim(), gallery.dim()));
  }
  const Eigen::MatrixXd& data = gallery.data();
  Eigen::VectorXd d(data.rows());
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    const Eigen::VectorXd row = data.row(i).transpose();
    d(i) = metric == Metric::kMad ? mad(probe.coeffs, row)
                                  : mse_dist(probe.coeffs, row);
  }
  return d;
}

Classification nn_classify(const FeatureVector& probe, const Gallery& gallery,
                           Metric metric) {
  const Eigen::VectorXd d = model_distances(probe, gallery, metric);
  ScoreSet scores;
  scores.subjects = gallery.subjects();
  scores.scores.assign(scores.subjects.size(),
                       std::numeric_limits<double>::infinity());
  scores.polarity = Polarity::kLowerIsBetter;
  scores.classifier_id = fmt::format("nn:{}", to_string(metric));
  for (std::size_t i = 0; i < gallery.size(); ++i) {
    auto& slot = scores.scores[gallery.subject_index(gallery.labels()[i])];
    slot = std::min(slot, d(static_cast<Eigen::Index>(i)));
  }
  Classification out;
  out.subject = scores.best_subject();
  out.scores = std::move(scores);
  return out;
}

}  // namespace faceid
