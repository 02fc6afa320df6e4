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

#include "faceid/fusion.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "faceid/error.h"

namespace faceid {

std::size_t NormalizedScoreSet::best_index() const {
  if (scores.empty()) throw ArgumentError("empty score set");
  return static_cast<std::size_t>(
      std::max_element(scores.begin(), scores.end()) - scores.begin());
}

NormalizedScoreSet normalize_scores(const ScoreSet& raw, ScoreNormalization mode) {
  if (raw.scores.size() < 2) {
    throw ArgumentError("score normalization needs at least two subjects");
  }
  if (raw.subjects.size() != raw.scores.size()) {
    throw ArgumentError("score set subjects and scores differ in length");
  }
  std::vector<double> s = raw.scores;
  for (double& v : s) {
    if (!std::isfinite(v)) throw ArgumentError("non-finite score");
    if (raw.polarity == Polarity::kLowerIsBetter) v = -v;
  }

  NormalizedScoreSet out;
  out.subjects = raw.subjects;
  out.classifier_id = raw.classifier_id;
  const auto [lo_it, hi_it] = std::minmax_element(s.begin(), s.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (hi == lo) {
    out.scores.assign(s.size(), 0.5);
    return out;
  }
  if (mode == ScoreNormalization::kMinMax) {
    for (double& v : s) v = (v - lo) / (hi - lo);
  } else {
    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= static_cast<double>(s.size());
    double var = 0.0;
    for (double v : s) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / static_cast<double>(s.size()));
    for (double& v : s) v = 1.0 / (1.0 + std::exp(-(v - mean) / sd));
  }
  out.scores = std::move(s);
  return out;
}

FusionResult fuse_mean(std::span<const NormalizedScoreSet> sets) {
  if (sets.empty()) throw ArgumentError("fusion needs at least one score set");
  const std::size_t n = sets.front().scores.size();
  FusionResult r;
  r.fused.subjects = sets.front().subjects;
  r.fused.scores.assign(n, 0.0);
  std::string id = "fusion:";
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& set = sets[k];
    if (set.scores.size() != n || set.subjects != r.fused.subjects) {
      throw ArgumentError(fmt::format(
          "score set {} covers {} subjects, expected {}", k, set.scores.size(), n));
    }
    for (std::size_t i = 0; i < n; ++i) r.fused.scores[i] += set.scores[i];
    if (k > 0) id += "+";
    id += set.classifier_id;
  }
  for (double& v : r.fused.scores) v /= static_cast<double>(sets.size());
  r.fused.classifier_id = id;
  r.subject = r.fused.best_subject();
  return r;
}

}  // namespace faceid
