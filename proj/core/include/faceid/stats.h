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

#include <filesystem>
#include <span>
#include <vector>

#include "faceid/transforms.h"

namespace faceid {

// Population statistics (1/N normalization) of one feature within one class.
struct ClassFeatureStats {
  double mean = 0.0;
  double variance = 0.0;
  int count = 0;
};

ClassFeatureStats class_stats(std::span<const double> values);

inline constexpr double kDefaultDiscriminabilityEps = 1e-12;

// |m_i - m_j| / sqrt(var_i + var_j + eps).
double discriminability(const ClassFeatureStats& a, const ClassFeatureStats& b,
                        double eps = kDefaultDiscriminabilityEps);

struct FeatureRank {
  int feature_index = 0;
  double aggregate_d = 0.0;
};

// Per feature dimension, the mean of D over all class pairs; sorted by
// descending aggregate D with ties kept in index order. Every vector must
// carry a label and at least two distinct labels must be present.
std::vector<FeatureRank> rank_features(std::span<const FeatureVector> features,
                                       double eps = kDefaultDiscriminabilityEps);

// CSV `rank,feature_index,aggregate_D`, rank starting at 1.
void write_ranking_csv(const std::filesystem::path& path,
                       std::span<const FeatureRank> ranking);

}  // namespace faceid
