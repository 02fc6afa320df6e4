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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "faceid/classifiers/pnn.h"
#include "faceid/classifiers/rbf.h"
#include "faceid/eigenfaces.h"
#include "faceid/error.h"
#include "faceid/parallel.h"

namespace faceid {
namespace {

double rate_of(const Classifier& classifier, std::span<const FeatureVector> probes,
               unsigned threads) {
  return evaluate(classifier, probes, threads).identification_rate;
}

double sample_stddev(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::optional<GaussianFit> fit_gaussian(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  double sum = 0.0;
  for (double x : v) sum += x;
  GaussianFit fit;
  fit.mean = sum / static_cast<double>(v.size());
  fit.stddev = sample_stddev(v, fit.mean);
  return fit;
}

}  // namespace

double identification_rate(std::span<const PredictionPair> pairs) {
  if (pairs.empty()) throw ArgumentError("identification rate of zero probes");
  std::size_t correct = 0;
  for (const auto& p : pairs) correct += p.truth == p.predicted ? 1 : 0;
  return 100.0 * static_cast<double>(correct) / static_cast<double>(pairs.size());
}

double round_rate(double rate) { return std::round(rate * 10.0) / 10.0; }

ExperimentResult evaluate(const Classifier& classifier,
                          std::span<const FeatureVector> probes, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentResult r;
  r.config = classifier.id();
  r.pairs.resize(probes.size());
  r.probe_samples.resize(probes.size());
  r.scores.resize(probes.size());
  parallel_for(probes.size(), threads, [&](std::size_t i) {
    const auto& probe = probes[i];
    if (!probe.label) throw ArgumentError("probe vectors must be labelled");
    Classification c = classifier.classify(probe);
    r.pairs[i] = {*probe.label, c.subject};
    r.probe_samples[i] = probe.sample_id;
    r.scores[i] = std::move(c.scores);
  });
  r.identification_rate = identification_rate(r.pairs);
  r.runtime_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return r;
}

FeatureCache::FeatureCache(std::span<const Image> images, TransformKind kind,
                           double log_offset, unsigned threads)
    : kind_(kind) {
  std::vector<std::optional<CoeffMatrix>> slots(images.size());
  parallel_for(images.size(), threads, [&](std::size_t i) {
    slots[i].emplace(transform(images[i], kind, log_offset));
  });
  coeffs_.reserve(images.size());
  for (auto& s : slots) coeffs_.push_back(std::move(*s));
  for (const auto& img : images) {
    labels_.push_back(img.subject_id);
    samples_.push_back(img.sample_id);
  }
}

std::vector<FeatureVector> FeatureCache::extract(const ZonalMask& mask,
                                                 ComplexReduction reduction) const {
  std::vector<FeatureVector> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    FeatureVector f = extract_features(coeffs_[i], mask, reduction);
    f.label = labels_[i];
    f.sample_id = samples_[i];
    out.push_back(std::move(f));
  }
  return out;
}

KltFeatures klt_features(const Split& split, int m_prime, unsigned threads) {
  const EigenBasis basis =
      train_eigenbasis(split.gallery, m_prime, RankPolicy::kClamp);
  KltFeatures out;
  out.used_dim = static_cast<int>(basis.size());
  out.gallery.resize(split.gallery.size());
  out.probes.resize(split.probes.size());
  parallel_for(split.gallery.size(), threads, [&](std::size_t i) {
    out.gallery[i] = project(split.gallery[i], basis);
  });
  parallel_for(split.probes.size(), threads, [&](std::size_t i) {
    out.probes[i] = project(split.probes[i], basis);
  });
  return out;
}

std::vector<CurvePoint> sweep_dimension(const FeatureCache& gallery,
                                        const FeatureCache& probes,
                                        ZonalMask::Shape shape,
                                        std::span<const double> grid, Metric metric,
                                        ComplexReduction reduction,
                                        unsigned threads) {
  if (grid.empty()) throw ArgumentError("dimension sweep grid is empty");
  std::vector<CurvePoint> curve;
  curve.reserve(grid.size());
  for (double g : grid) {
    const ZonalMask mask =
        shape == ZonalMask::Shape::kRectangular
            ? ZonalMask::rectangular(static_cast<int>(std::lround(g)))
            : ZonalMask::sectorial(g);
    auto gallery_features = gallery.extract(mask, reduction);
    const auto probe_features = probes.extract(mask, reduction);
    const int dim = static_cast<int>(gallery_features.front().dim());
    const Gallery g_set(std::move(gallery_features));
    const auto nn = make_classifier(
        ClassifierSpec{ClassifierSpec::Kind::kNearestNeighbor, metric, {}}, g_set,
        ClassifierOptions{});
    curve.push_back({g, dim, rate_of(*nn, probe_features, threads)});
  }
  return curve;
}

std::vector<CurvePoint> sweep_spread(std::span<const FeatureVector> gallery,
                                     std::span<const FeatureVector> probes,
                                     SpreadClassifier classifier,
                                     std::span<const double> grid,
                                     const ClassifierOptions& options,
                                     unsigned threads) {
  if (grid.empty()) throw ArgumentError("spread sweep grid is empty");
  for (double s : grid) {
    if (!(s > 0.0)) throw ArgumentError("spreads must be > 0");
  }
  const Gallery g_set(std::vector<FeatureVector>(gallery.begin(), gallery.end()));
  const int dim = static_cast<int>(g_set.dim());
  std::vector<CurvePoint> curve(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    ClassifierOptions o = options;
    o.pnn_spread = grid[i];
    o.rbf_spread = grid[i];
    const ClassifierSpec spec{classifier == SpreadClassifier::kPnn
                                  ? ClassifierSpec::Kind::kPnn
                                  : ClassifierSpec::Kind::kRbf,
                              Metric::kMad,
                              {}};
    const auto model = make_classifier(spec, g_set, o);
    curve[i] = {grid[i], dim, rate_of(*model, probes, 1)};
  });
  return curve;
}

CurvePoint curve_peak(std::span<const CurvePoint> curve) {
  if (curve.empty()) throw ArgumentError("peak of an empty curve");
  const CurvePoint* best = &curve.front();
  for (const auto& p : curve) {
    if (p.rate > best->rate) best = &p;
  }
  return *best;
}

std::vector<double> default_spread_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 20; ++k) grid.push_back(k / 10.0);
  return grid;
}

std::vector<double> sector_radius_grid(int max_dim, Eigen::Index rows,
                                       Eigen::Index cols) {
  const Eigen::Index limit = std::min(rows, cols);
  std::set<Eigen::Index> squared;
  for (Eigen::Index r = 0; r < limit; ++r) {
    for (Eigen::Index c = 0; c < limit; ++c) squared.insert(r * r + c * c);
  }
  std::vector<double> distances;
  for (auto s : squared) distances.push_back(std::sqrt(static_cast<double>(s)));

  std::vector<double> radii;
  int retained = 0;
  for (std::size_t j = 0; j + 1 < distances.size(); ++j) {
    // Radius halfway to the next distinct distance retains every position
    // at distance <= distances[j].
    const double radius = 0.5 * (distances[j] + distances[j + 1]);
    if (radius > static_cast<double>(limit)) break;
    retained = static_cast<int>(
        ZonalMask::sectorial(radius).positions(rows, cols).size());
    if (retained > max_dim) break;
    radii.push_back(radius);
  }
  return radii;
}

int HistogramPair::range_overlap() const {
  if (intra.empty() || inter.empty()) return 0;
  const auto [intra_lo, intra_hi] = std::minmax_element(intra.begin(), intra.end());
  const auto [inter_lo, inter_hi] = std::minmax_element(inter.begin(), inter.end());
  const double lo = std::max(*intra_lo, *inter_lo);
  const double hi = std::min(*intra_hi, *inter_hi);
  if (lo > hi) return 0;
  int count = 0;
  for (double v : intra) count += (v >= lo && v <= hi) ? 1 : 0;
  for (double v : inter) count += (v >= lo && v <= hi) ? 1 : 0;
  return count;
}

HistogramPair distance_histograms(const Eigen::MatrixXd& values,
                                  std::span<const int> probe_labels,
                                  std::span<const int> model_labels, int bins) {
  if (values.size() == 0) throw ArgumentError("histogram of an empty score matrix");
  if (static_cast<Eigen::Index>(probe_labels.size()) != values.rows() ||
      static_cast<Eigen::Index>(model_labels.size()) != values.cols()) {
    throw ArgumentError("label counts do not match the score matrix");
  }
  if (bins < 1) throw ArgumentError("histogram needs at least one bin");
  HistogramPair h;
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      auto& dest = probe_labels[static_cast<std::size_t>(i)] ==
                           model_labels[static_cast<std::size_t>(j)]
                       ? h.intra
                       : h.inter;
      dest.push_back(values(i, j));
    }
  }
  h.intra_fit = fit_gaussian(h.intra);
  h.inter_fit = fit_gaussian(h.inter);

  double lo = values.minCoeff();
  double hi = values.maxCoeff();
  if (hi == lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / bins;
  for (int b = 0; b <= bins; ++b) h.edges.push_back(lo + b * width);
  h.edges.back() = hi;
  h.intra_counts.assign(static_cast<std::size_t>(bins), 0);
  h.inter_counts.assign(static_cast<std::size_t>(bins), 0);
  auto bin_of = [&](double v) {
    const auto b = static_cast<int>((v - lo) / width);
    return static_cast<std::size_t>(std::clamp(b, 0, bins - 1));
  };
  for (double v : h.intra) ++h.intra_counts[bin_of(v)];
  for (double v : h.inter) ++h.inter_counts[bin_of(v)];
  return h;
}

std::vector<Table1Row> table1_report(const Split& split,
                                     const Table1Options& options) {
  const unsigned threads = options.threads;
  std::vector<Table1Row> rows;

  auto nn_rate = [&](const std::vector<FeatureVector>& gallery,
                     const std::vector<FeatureVector>& probes, Metric metric) {
    const Gallery g(gallery);
    const auto nn = make_classifier(
        ClassifierSpec{ClassifierSpec::Kind::kNearestNeighbor, metric, {}}, g,
        options.classifiers);
    return rate_of(*nn, probes, threads);
  };

  for (const int dim : {200, 100}) {
    const KltFeatures klt = klt_features(split, dim, threads);
    const std::string note =
        klt.used_dim < dim ? fmt::format("attainable rank {}", klt.used_dim) : "";
    rows.push_back({"eigenfaces", dim, klt.used_dim, "NN (MAD)",
                    dim == 200 ? 86.5 : 78.5,
                    nn_rate(klt.gallery, klt.probes, Metric::kMad), note, true});
    rows.push_back({"eigenfaces", dim, klt.used_dim, "NN (MSE)",
                    dim == 200 ? 78.0 : 75.5,
                    nn_rate(klt.gallery, klt.probes, Metric::kMse), note, true});
  }

  const FeatureCache gallery_cache(split.gallery, TransformKind::kDct, kDefaultLogOffset,
                                   threads);
  const FeatureCache probe_cache(split.probes, TransformKind::kDct, kDefaultLogOffset,
                                 threads);
  const ZonalMask mask = ZonalMask::rectangular(10);
  const auto dct_gallery = gallery_cache.extract(mask);
  const auto dct_probes = probe_cache.extract(mask);
  const int dct_dim = static_cast<int>(dct_gallery.front().dim());
  rows.push_back({"DCT", 100, dct_dim, "NN (MAD)", 92.5,
                  nn_rate(dct_gallery, dct_probes, Metric::kMad), "", true});
  rows.push_back({"DCT", 100, dct_dim, "NN (MSE)", 91.0,
                  nn_rate(dct_gallery, dct_probes, Metric::kMse), "", true});
  if (options.nn_rows_only) return rows;

  const Gallery g(dct_gallery);
  const auto& co = options.classifiers;

  const auto mlp = make_classifier(ClassifierSpec::parse("mlp"), g, co);
  rows.push_back({"DCT", 100, dct_dim, "MLP", 95.0, rate_of(*mlp, dct_probes, threads),
                  fmt::format("seed {}, {} epochs, gamma {}", co.mlp.seed,
                              co.mlp.epochs, co.mlp.gamma),
                  false});

  const auto rbf = make_classifier(ClassifierSpec::parse("rbf"), g, co);
  rows.push_back({"DCT", 100, dct_dim, "RBF", 96.0, rate_of(*rbf, dct_probes, threads),
                  fmt::format("spread {}, {} centers", co.rbf_spread,
                              co.rbf_max_centers),
                  false});

  const auto pnn_curve = sweep_spread(dct_gallery, dct_probes, SpreadClassifier::kPnn,
                                      options.pnn_spread_grid, co, threads);
  const CurvePoint pnn_best = curve_peak(pnn_curve);
  rows.push_back({"DCT", 100, dct_dim, "PNN", 91.0, pnn_best.rate,
                  fmt::format("best spread {}", pnn_best.parameter), false});

  const auto fused = make_classifier(ClassifierSpec::parse("fusion:rbf+nn:mad"), g, co);
  rows.push_back({"DCT", 100, dct_dim, "RBF+NN (MAD)", 96.5,
                  rate_of(*fused, dct_probes, threads),
                  fmt::format("mean of min-max normalized scores, spread {}",
                              co.rbf_spread),
                  false});
  return rows;
}

}  // namespace faceid
