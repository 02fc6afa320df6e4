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

#include "faceid/classifiers/pnn.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "faceid/error.h"

namespace faceid {

double radbas(double z) { return std::exp(-z * z); }

double radbas_bias(double spread) {
  if (!(spread > 0.0)) throw ArgumentError("spread must be > 0");
  return std::sqrt(std::numbers::ln2) / spread;
}

PnnModel pnn_build(const Gallery& gallery, double spread,
                   Normalization normalization) {
  if (!(spread > 0.0)) throw ArgumentError("PNN spread must be > 0");
  PnnModel m;
  m.scaler = gallery.scaler(normalization);
  m.centers = gallery.normalized(m.scaler);
  m.labels = gallery.labels();
  m.subjects = gallery.subjects();
  m.spread = spread;
  return m;
}

Classification pnn_classify(const PnnModel& model, const FeatureVector& probe) {
  const Eigen::VectorXd x = model.scaler.apply(probe.coeffs);
  const double b = radbas_bias(model.spread);

  auto subject_slot = [&](int label) {
    const auto it = std::lower_bound(model.subjects.begin(), model.subjects.end(), label);
    return static_cast<std::size_t>(it - model.subjects.begin());
  };

  std::vector<double> sums(model.subjects.size(), 0.0);
  double total = 0.0;
  double nearest = std::numeric_limits<double>::infinity();
  std::size_t nearest_row = 0;
  for (Eigen::Index i = 0; i < model.centers.rows(); ++i) {
    const double d = (model.centers.row(i).transpose() - x).norm();
    if (d < nearest) {
      nearest = d;
      nearest_row = static_cast<std::size_t>(i);
    }
    const double a = radbas(d * b);
    sums[subject_slot(model.labels[static_cast<std::size_t>(i)])] += a;
    total += a;
  }

  Classification out;
  out.scores.subjects = model.subjects;
  out.scores.polarity = Polarity::kHigherIsBetter;
  out.scores.classifier_id = "pnn";
  if (total > 0.0) {
    for (double& s : sums) s /= total;
    out.scores.scores = std::move(sums);
  } else {
    out.scores.scores.assign(model.subjects.size(), 0.0);
    out.scores.scores[subject_slot(model.labels[nearest_row])] = 1.0;
  }
  out.subject = out.scores.best_subject();
  return out;
}

}  // namespace faceid
