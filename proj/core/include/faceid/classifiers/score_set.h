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

#include <string>
#include <vector>

namespace faceid {

enum class Polarity { kHigherIsBetter, kLowerIsBetter };

// One score per enrolled subject for one probe. subjects is ascending, so
// "lowest subject id wins ties" is "lowest index wins ties".
struct ScoreSet {
  std::vector<int> subjects;
  std::vector<double> scores;
  Polarity polarity = Polarity::kHigherIsBetter;
  std::string classifier_id;

  std::size_t best_index() const;
  int best_subject() const { return subjects.at(best_index()); }
};

struct Classification {
  int subject = 0;
  ScoreSet scores;
};

}  // namespace faceid
