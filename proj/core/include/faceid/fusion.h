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
#include <string>
#include <vector>

#include "faceid/classifiers/score_set.h"

namespace faceid {

// kMinMax: negate lower-is-better scores, then min-max to [0,1]; constant
// sets map to 0.5 everywhere.
// kZScore: negate, standardize, squash through the logistic function.
enum class ScoreNormalization { kMinMax, kZScore };

struct NormalizedScoreSet {
  std::vector<int> subjects;
  std::vector<double> scores;  // higher is better, each in [0,1]
  std::string classifier_id;

  std::size_t best_index() const;
  int best_subject() const { return subjects.at(best_index()); }
};

NormalizedScoreSet normalize_scores(
    const ScoreSet& raw, ScoreNormalization mode = ScoreNormalization::kMinMax);

struct FusionResult {
  int subject = 0;
  NormalizedScoreSet fused;
};

// Element-wise mean; argmax with ties to the lowest subject id.
FusionResult fuse_mean(std::span<const NormalizedScoreSet> sets);

}  // namespace faceid
