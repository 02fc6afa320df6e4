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

#include "faceid/stats.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "faceid/error.h"
#include "faceid/io.h"

namespace faceid {

ClassFeatureStats class_stats(std::span<const double> values) {
  if (values.empty()) throw ArgumentError("class_stats of an empty list");
  ClassFeatureStats s;
  s.count = static_cast<int>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / s.count;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.variance = ss / s.count;
  return s;
}

double discriminability(const ClassFeatureStats& a, const ClassFeatureStats& b,
                        double eps) {
  return std::abs(a.mean - b.mean) / std::sqrt(a.variance + b.variance + eps);
}

std::vector<FeatureRank> rank_features(std::span<const FeatureVector> features,
                                       double eps) {
  if (features.empty()) throw ArgumentError("rank_features needs labelled vectors");
  const Eigen::Index dim = features.front().dim();
  std::map<int, std::vector<const FeatureVector*>> by_class;
  for (const auto& f : features) {
    if (!f.label) throw ArgumentError("rank_features needs labelled vectors");
    if (f.dim() != dim) throw ArgumentError("rank_features needs uniform dimension");
    by_class[*f.label].push_back(&f);
  }
  if (by_class.size() < 2) {
    throw ArgumentError("rank_features needs at least two classes");
  }

  std::vector<FeatureRank> ranking(static_cast<std::size_t>(dim));
  std::vector<double> column;
  std::vector<ClassFeatureStats> stats(by_class.size());
  const double pairs =
      static_cast<double>(by_class.size() * (by_class.size() - 1) / 2);
  for (Eigen::Index d = 0; d < dim; ++d) {
    std::size_t c = 0;
    for (const auto& [label, members] : by_class) {
      column.clear();
      for (const auto* f : members) column.push_back(f->coeffs(d));
      stats[c++] = class_stats(column);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < stats.size(); ++i) {
      for (std::size_t j = i + 1; j < stats.size(); ++j) {
        total += discriminability(stats[i], stats[j], eps);
      }
    }
    ranking[static_cast<std::size_t>(d)] = {static_cast<int>(d), total / pairs};
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const FeatureRank& x, const FeatureRank& y) {
                     return x.aggregate_d > y.aggregate_d;
                   });
  return ranking;
}

void write_ranking_csv(const std::filesystem::path& path,
                       std::span<const FeatureRank> ranking) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << "rank,feature_index,aggregate_D\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    out << (i + 1) << ',' << ranking[i].feature_index << ','
        << format_double(ranking[i].aggregate_d) << '\n';
  }
}

}  // namespace faceid
