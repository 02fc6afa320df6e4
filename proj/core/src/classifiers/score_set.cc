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

#include "faceid/classifiers/score_set.h"

#include "faceid/error.h"

namespace faceid {

std::size_t ScoreSet::best_index() const {
  if (scores.empty()) throw ArgumentError("empty score set");
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    const bool better = polarity == Polarity::kHigherIsBetter
                            ? scores[i] > scores[best]
                            : scores[i] < scores[best];
    if (better) best = i;
  }
  return best;
}

}  // namespace faceid
