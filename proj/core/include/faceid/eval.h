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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "faceid/classifier.h"
#include "faceid/dataset.h"
#include "faceid/transforms.h"

namespace faceid {

struct PredictionPair {
  int truth = 0;
  int predicted = 0;
};

// 100 * correct / total. Throws ArgumentError on an empty list.
double identification_rate(std::span<const PredictionPair> pairs);

// Rounds a rate to one decimal place.
double round_rate(double rate);

struct ExperimentResult {
  std::string config;
  std::vector<PredictionPair> pairs;
  std::vector<int> probe_samples;
  std::vector<ScoreSet> scores;
  double identification_rate = 0.0;
  double runtime_seconds = 0.0;
};

// Classifies every probe (in parallel; results kept in probe order).
ExperimentResult evaluate(const Classifier& classifier,
                          std::span<const FeatureVector> probes,
                          unsigned threads = 0);

// Full transform of every image, computed once so that many masks can be
// applied without recomputing the transforms.
class FeatureCache {
 public:
  FeatureCache(std::span<const Image> images, TransformKind kind,
               double log_offset = kDefaultLogOffset, unsigned threads = 0);

  TransformKind kind() const { return kind_; }
  std::size_t size() const { return coeffs_.size(); }
  const CoeffMatrix& coeffs(std::size_t i) const { return coeffs_.at(i); }

  std::vector<FeatureVector> extract(
      const ZonalMask& mask,
      ComplexReduction reduction = ComplexReduction::kModulus) const;

 private:
  TransformKind kind_;
  std::vector<CoeffMatrix> coeffs_;
  std::vector<int> labels_;
  std::vector<int> samples_;
};

// KLT features of gallery and probes from one eigenbasis trained on the
// gallery. m_prime is clamped to the attainable rank; the count actually
// used is returned in used_dim.
struct KltFeatures {
  std::vector<FeatureVector> gallery;
  std::vector<FeatureVector> probes;
  int used_dim = 0;
};
KltFeatures klt_features(const Split& split, int m_prime, unsigned threads = 0);

struct CurvePoint {
  double parameter = 0.0;  // mask side / radius, or spread
  int dim = 0;
  double rate = 0.0;
};

// One nearest-neighbour identification rate per grid entry. For a
// rectangular family the grid holds sides N', for a sectorial family radii.
std::vector<CurvePoint> sweep_dimension(
    const FeatureCache& gallery, const FeatureCache& probes,
    ZonalMask::Shape shape, std::span<const double> grid, Metric metric,
    ComplexReduction reduction = ComplexReduction::kModulus,
    unsigned threads = 0);

enum class SpreadClassifier { kPnn, kRbf };

std::vector<CurvePoint> sweep_spread(std::span<const FeatureVector> gallery,
                                     std::span<const FeatureVector> probes,
                                     SpreadClassifier classifier,
                                     std::span<const double> grid,
                                     const ClassifierOptions& options,
                                     unsigned threads = 0);

// Point of the curve with the highest rate; the first one on ties.
CurvePoint curve_peak(std::span<const CurvePoint> curve);

// 0.1, 0.2, ..., 2.0
std::vector<double> default_spread_grid();

// Sectorial radii giving one curve point per distinct retained count for
// every count up to max_dim.
std::vector<double> sector_radius_grid(int max_dim, Eigen::Index rows,
                                       Eigen::Index cols);

struct GaussianFit {
  double mean = 0.0;
  double stddev = 0.0;
};

struct HistogramPair {
  std::vector<double> intra;  // genuine comparisons
  std::vector<double> inter;  // impostor comparisons
  std::optional<GaussianFit> intra_fit;
  std::optional<GaussianFit> inter_fit;
  std::vector<double> edges;  // bins + 1 shared edges
  std::vector<int> intra_counts;
  std::vector<int> inter_counts;

  // Number of values (from both sets) that lie inside the intersection of
  // the intra and inter ranges. Zero when the sets are separated.
  int range_overlap() const;
};

// Splits a probes x models matrix into genuine (same label) and impostor
// entries, bins them on shared edges and fits a Gaussian to each side by
// sample mean and sample standard deviation.
HistogramPair distance_histograms(const Eigen::MatrixXd& values,
                                  std::span<const int> probe_labels,
                                  std::span<const int> model_labels,
                                  int bins = 50);

struct Table1Row {
  std::string feature;
  int dim = 0;  // requested dimension
  int used_dim = 0;
  std::string classifier;
  double reference_rate = 0.0;
  double measured_rate = 0.0;
  std::string note;
  bool nn_row = false;
};

struct Table1Options {
  bool nn_rows_only = false;
  ClassifierOptions classifiers;
  std::vector<double> pnn_spread_grid = default_spread_grid();
  unsigned threads = 0;
};

// Every row of the reference comparison table, published rate next to the
// measured value. The PNN row reports the best spread of pnn_spread_grid;
// RBF and fusion rows use classifiers.rbf_spread.
std::vector<Table1Row> table1_report(const Split& split,
                                     const Table1Options& options);

}  // namespace faceid
