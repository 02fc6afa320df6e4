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

#include "faceid/eval.h"

#include <gtest/gtest.h>

#include <vector>

#include "faceid/classifiers/nn.h"
#include "faceid/dataset.h"
#include "faceid/error.h"
#include "oracles.h"

namespace faceid {
namespace {

std::vector<PredictionPair> pairs(int correct, int total) {
  std::vector<PredictionPair> out;
  for (int i = 0; i < total; ++i) out.push_back({1 + i % 40, i < correct ? 1 + i % 40 : 0});
  return out;
}

TEST(IdentificationRateTest, Examples) {
  EXPECT_EQ(identification_rate(pairs(200, 200)), 100.0);
  EXPECT_EQ(identification_rate(pairs(185, 200)), 92.5);
  EXPECT_EQ(identification_rate(pairs(0, 200)), 0.0);
  EXPECT_THROW(identification_rate(std::vector<PredictionPair>{}), ArgumentError);
  EXPECT_EQ(round_rate(91.04), 91.0);
  EXPECT_EQ(round_rate(96.46), 96.5);
}

class SyntheticProtocol : public ::testing::Test {
 protected:
  SyntheticProtocol()
      : corpus_(synth_corpus(42, 8, 10, 16, 16)), split_(split_first_k(corpus_, 5)) {}
  Corpus corpus_;
  Split split_;
};

TEST_F(SyntheticProtocol, EvaluateKeepsProbeOrder) {
  const FeatureCache gallery(split_.gallery, TransformKind::kDct);
  const FeatureCache probes(split_.probes, TransformKind::kDct);
  const auto mask = ZonalMask::rectangular(4);
  const Gallery g(gallery.extract(mask));
  const auto nn = make_classifier(ClassifierSpec::parse("nn:mad"), g, {});
  const auto probe_vectors = probes.extract(mask);
  const ExperimentResult serial = evaluate(*nn, probe_vectors, 1);
  const ExperimentResult parallel = evaluate(*nn, probe_vectors, 4);
  ASSERT_EQ(serial.pairs.size(), 40u);
  for (std::size_t i = 0; i < serial.pairs.size(); ++i) {
    EXPECT_EQ(serial.pairs[i].truth, split_.probes[i].subject_id);
    EXPECT_EQ(serial.pairs[i].predicted, parallel.pairs[i].predicted);
    EXPECT_EQ(serial.probe_samples[i], split_.probes[i].sample_id);
  }
  EXPECT_EQ(serial.identification_rate, parallel.identification_rate);
  EXPECT_EQ(serial.config, "nn:mad");
  EXPECT_GT(serial.identification_rate, 50.0);
}

TEST_F(SyntheticProtocol, RectangularSweepHasSquareDims) {
  const FeatureCache gallery(split_.gallery, TransformKind::kDct);
  const FeatureCache probes(split_.probes, TransformKind::kDct);
  const std::vector<double> grid{1, 2, 3, 4, 10, 16};
  const auto curve = sweep_dimension(gallery, probes, ZonalMask::Shape::kRectangular,
                                     grid, Metric::kMad);
  ASSERT_EQ(curve.size(), grid.size());
  const std::vector<int> dims{1, 4, 9, 16, 100, 256};
  for (std::size_t i = 0; i < curve.size(); ++i) {
    EXPECT_EQ(curve[i].parameter, grid[i]);
    EXPECT_EQ(curve[i].dim, dims[i]);
    EXPECT_GE(curve[i].rate, 0.0);
    EXPECT_LE(curve[i].rate, 100.0);
  }
  // Re-running is deterministic.
  const auto again = sweep_dimension(gallery, probes, ZonalMask::Shape::kRectangular,
                                     grid, Metric::kMad);
  for (std::size_t i = 0; i < curve.size(); ++i) EXPECT_EQ(curve[i].rate, again[i].rate);
  EXPECT_THROW(sweep_dimension(gallery, probes, ZonalMask::Shape::kRectangular,
                               std::vector<double>{}, Metric::kMad),
               ArgumentError);
}

TEST_F(SyntheticProtocol, SectorSweepDimsIncrease) {
  const FeatureCache gallery(split_.gallery, TransformKind::kLogDft);
  const FeatureCache probes(split_.probes, TransformKind::kLogDft);
  const auto grid = sector_radius_grid(60, 16, 16);
  ASSERT_FALSE(grid.empty());
  const auto curve = sweep_dimension(gallery, probes, ZonalMask::Shape::kSectorial, grid,
                                     Metric::kMse);
  for (std::size_t i = 1; i < curve.size(); ++i) EXPECT_GT(curve[i].dim, curve[i - 1].dim);
  EXPECT_LE(curve.back().dim, 60);
  EXPECT_EQ(curve.front().dim, 1);
}

TEST(SectorRadiusGridTest, OneRadiusPerDistinctCount) {
  const auto grid = sector_radius_grid(900, 112, 92);
  ASSERT_FALSE(grid.empty());
  int last = 0;
  for (double r : grid) {
    const int count = static_cast<int>(ZonalMask::sectorial(r).positions(112, 92).size());
    EXPECT_GT(count, last);
    EXPECT_LE(count, 900);
    last = count;
  }
  EXPECT_GT(grid.size(), 50u);
}

TEST_F(SyntheticProtocol, TinySpreadPnnMatchesEuclideanNearestNeighbour) {
  const FeatureCache gallery(split_.gallery, TransformKind::kDct);
  const FeatureCache probes(split_.probes, TransformKind::kDct);
  const auto mask = ZonalMask::rectangular(5);
  const auto gv = gallery.extract(mask);
  const auto pv = probes.extract(mask);
  ClassifierOptions options;
  options.radial_normalization = Normalization::kNone;
  const std::vector<double> grid{1e-4};
  const auto curve = sweep_spread(gv, pv, SpreadClassifier::kPnn, grid, options);
  const Gallery g(gv);
  const auto nn = make_classifier(ClassifierSpec::parse("nn:mse"), g, options);
  EXPECT_EQ(curve.at(0).rate, evaluate(*nn, pv).identification_rate);
}

TEST_F(SyntheticProtocol, SpreadSweepHasOnePointPerGridEntry) {
  const FeatureCache gallery(split_.gallery, TransformKind::kDct);
  const FeatureCache probes(split_.probes, TransformKind::kDct);
  const auto mask = ZonalMask::rectangular(5);
  const auto gv = gallery.extract(mask);
  const auto pv = probes.extract(mask);
  ClassifierOptions options;
  options.rbf_max_centers = 20;
  const auto grid = default_spread_grid();
  ASSERT_EQ(grid.size(), 20u);
  EXPECT_NEAR(grid.front(), 0.1, 1e-12);
  EXPECT_NEAR(grid.back(), 2.0, 1e-12);
  for (auto kind : {SpreadClassifier::kPnn, SpreadClassifier::kRbf}) {
    const auto curve = sweep_spread(gv, pv, kind, grid, options);
    ASSERT_EQ(curve.size(), grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(curve[i].parameter, grid[i]);
    const CurvePoint peak = curve_peak(curve);
    for (const auto& p : curve) EXPECT_LE(p.rate, peak.rate);
  }
}

TEST(CurvePeakTest, FirstMaximumWins) {
  const std::vector<CurvePoint> curve{{0.1, 1, 50}, {0.2, 1, 80}, {0.3, 1, 80}};
  EXPECT_EQ(curve_peak(curve).parameter, 0.2);
}

TEST(HistogramTest, SingleProbeAgainstOrlSizedGallery) {
  std::vector<int> model_labels;
  for (int s = 1; s <= 40; ++s) {
    for (int k = 0; k < 5; ++k) model_labels.push_back(s);
  }
  const std::vector<int> probe_labels{7};
  const Eigen::MatrixXd values = testing::random_matrix(1, 200, 3);
  const auto h = distance_histograms(values, probe_labels, model_labels);
  EXPECT_EQ(h.intra.size(), 5u);
  EXPECT_EQ(h.inter.size(), 195u);
  int intra = 0, inter = 0;
  for (int c : h.intra_counts) intra += c;
  for (int c : h.inter_counts) inter += c;
  EXPECT_EQ(intra, 5);
  EXPECT_EQ(inter, 195);
  EXPECT_EQ(h.edges.size(), 51u);
  ASSERT_TRUE(h.intra_fit.has_value());
  EXPECT_GE(h.intra_fit->stddev, 0.0);
}

TEST(HistogramTest, SeparatedSetsDoNotOverlap) {
  // Genuine distances in [0, 1), impostor distances in [5, 6).
  const std::vector<int> probe_labels{1, 2, 3};
  const std::vector<int> model_labels{1, 2, 3, 1};
  Eigen::MatrixXd v(3, 4);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      v(i, j) = probe_labels[i] == model_labels[j] ? 0.1 * (i + j) : 5.0 + 0.1 * (i + j);
    }
  }
  const auto h = distance_histograms(v, probe_labels, model_labels, 10);
  EXPECT_EQ(h.range_overlap(), 0);
  for (std::size_t b = 0; b < 10; ++b) {
    EXPECT_FALSE(h.intra_counts[b] > 0 && h.inter_counts[b] > 0);
  }
}

TEST(HistogramTest, GaussianFitUsesSampleStatistics) {
  const std::vector<int> probe_labels{1};
  const std::vector<int> model_labels{1, 1, 1, 2};
  Eigen::MatrixXd v(1, 4);
  v << 1, 2, 3, 9;
  const auto h = distance_histograms(v, probe_labels, model_labels, 4);
  EXPECT_DOUBLE_EQ(h.intra_fit->mean, 2.0);
  EXPECT_DOUBLE_EQ(h.intra_fit->stddev, 1.0);
  EXPECT_DOUBLE_EQ(h.inter_fit->mean, 9.0);
  EXPECT_EQ(h.inter_fit->stddev, 0.0);
}

TEST(HistogramTest, EmptySetMarksFitAbsent) {
  const std::vector<int> probe_labels{1};
  const std::vector<int> model_labels{2, 3};
  const auto h = distance_histograms(Eigen::MatrixXd::Ones(1, 2), probe_labels, model_labels);
  EXPECT_FALSE(h.intra_fit.has_value());
  EXPECT_TRUE(h.inter_fit.has_value());
  EXPECT_THROW(distance_histograms(Eigen::MatrixXd(0, 0), {}, {}), ArgumentError);
}

TEST_F(SyntheticProtocol, KltFeaturesClampToAttainableRank) {
  const KltFeatures klt = klt_features(split_, 200);
  EXPECT_EQ(klt.used_dim, 39);
  EXPECT_EQ(klt.gallery.size(), 40u);
  EXPECT_EQ(klt.probes.size(), 40u);
  EXPECT_EQ(klt.probes[0].dim(), 39);
  EXPECT_EQ(*klt.probes[0].label, split_.probes[0].subject_id);
}

TEST_F(SyntheticProtocol, Table1NearestNeighbourRowsAreDeterministic) {
  Table1Options options;
  options.nn_rows_only = true;
  const auto a = table1_report(split_, options);
  const auto b = table1_report(split_, options);
  ASSERT_EQ(a.size(), 6u);
  const std::vector<double> reference{86.5, 78.0, 78.5, 75.5, 92.5, 91.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i].nn_row);
    EXPECT_EQ(a[i].reference_rate, reference[i]);
    EXPECT_EQ(a[i].measured_rate, b[i].measured_rate);
  }
  EXPECT_EQ(a[0].used_dim, 39);
  EXPECT_EQ(a[0].note, "attainable rank 39");
  EXPECT_EQ(a[4].feature, "DCT");
  EXPECT_EQ(a[4].used_dim, 100);
}

TEST_F(SyntheticProtocol, Table1FullReportHasTenRows) {
  Table1Options options;
  options.classifiers.mlp.epochs = 50;
  options.classifiers.rbf_max_centers = 40;
  options.pnn_spread_grid = {0.5, 1.0};
  const auto rows = table1_report(split_, options);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[6].classifier, "MLP");
  EXPECT_EQ(rows[7].classifier, "RBF");
  EXPECT_EQ(rows[8].classifier, "PNN");
  EXPECT_EQ(rows[9].classifier, "RBF+NN (MAD)");
  EXPECT_EQ(rows[9].reference_rate, 96.5);
  for (const auto& r : rows) {
    EXPECT_GE(r.measured_rate, 0.0);
    EXPECT_LE(r.measured_rate, 100.0);
  }
}

}  // namespace
}  // namespace faceid
