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

#include "commands.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <fmt/format.h>

#include "faceid/classifiers/nn.h"
#include "faceid/error.h"
#include "faceid/eval.h"
#include "faceid/io.h"
#include "faceid/pgm.h"
#include "faceid/stats.h"

namespace faceid::cli {
namespace {

using Clock = std::chrono::steady_clock;

std::filesystem::path prepare_out(const RunConfig& config) {
  std::filesystem::path out(config.out);
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec || !std::filesystem::is_directory(out)) {
    throw DataError(fmt::format("cannot create output directory {}", out.string()));
  }
  return out;
}

struct Prepared {
  Dataset dataset;
  Split split;
  std::filesystem::path out;
};

Prepared prepare(const RunConfig& config) {
  validate(config);
  Prepared p{load_dataset(config), {}, {}};
  p.split = split_first_k(p.dataset.corpus, config.split_k);
  p.out = prepare_out(config);
  return p;
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Genuine/impostor comparison matrix for the histogram export. Nearest
// neighbour runs compare against every enrolled vector; the other
// classifiers compare against per-subject outputs.
HistogramPair histograms_for(const ClassifierSpec& spec, const Gallery& gallery,
                             const std::vector<FeatureVector>& probes,
                             const ExperimentResult& result, int bins) {
  std::vector<int> probe_labels;
  for (const auto& p : probes) probe_labels.push_back(*p.label);
  if (spec.kind == ClassifierSpec::Kind::kNearestNeighbor) {
    Eigen::MatrixXd values(static_cast<Eigen::Index>(probes.size()),
                           static_cast<Eigen::Index>(gallery.size()));
    for (std::size_t i = 0; i < probes.size(); ++i) {
      values.row(static_cast<Eigen::Index>(i)) =
          model_distances(probes[i], gallery, spec.metric).transpose();
    }
    return distance_histograms(values, probe_labels, gallery.labels(), bins);
  }
  const auto& subjects = result.scores.front().subjects;
  Eigen::MatrixXd values(static_cast<Eigen::Index>(probes.size()),
                         static_cast<Eigen::Index>(subjects.size()));
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t k = 0; k < subjects.size(); ++k) {
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          result.scores[i].scores[k];
    }
  }
  return distance_histograms(values, probe_labels, subjects, bins);
}

}  // namespace

int cmd_extract(const RunConfig& config) {
  const Prepared p = prepare(config);
  const FeatureSets f = build_features(config, p.split);
  write_features_csv(p.out / "gallery_features.csv", f.gallery);
  write_features_csv(p.out / "probe_features.csv", f.probes);

  auto manifest = manifest_base("extract", config, p.dataset);
  manifest["results"] = {{"gallery_vectors", f.gallery.size()},
                         {"probe_vectors", f.probes.size()},
                         {"dim", f.used_dim}};
  manifest["outputs"] = {"gallery_features.csv", "probe_features.csv"};
  write_json(p.out / "manifest.json", manifest);

  fmt::print("extracted {} gallery and {} probe vectors of dim {} ({})\n",
             f.gallery.size(), f.probes.size(), f.used_dim,
             config.transform == "klt" ? fmt::format("klt:{}", config.dim)
                                       : config.transform + " " + config.mask);
  if (config.transform == "klt" && f.used_dim < config.dim) {
    fmt::print("note: {} eigenfaces requested, attainable rank is {}\n", config.dim,
               f.used_dim);
  }
  return 0;
}

int cmd_evaluate(const RunConfig& config, const EvaluateOptions& options) {
  const Prepared p = prepare(config);
  const auto start = Clock::now();
  const FeatureSets f = build_features(config, p.split);
  const Gallery gallery(f.gallery);
  const ClassifierSpec spec = ClassifierSpec::parse(config.classifier);
  MlpTrainingLog log;
  const auto classifier =
      make_classifier(spec, gallery, classifier_options(config), &log);
  const ExperimentResult result = evaluate(*classifier, f.probes, config.threads);

  nlohmann::json outputs = {"predictions.csv"};
  write_predictions_csv(p.out / "predictions.csv", result);
  if (spec.kind == ClassifierSpec::Kind::kFusion) {
    write_fusion_report_csv(p.out / "fusion_report.csv", result);
    outputs.push_back("fusion_report.csv");
  }
  if (!log.loss.empty()) {
    write_training_log_csv(p.out / "training_log.csv", log);
    outputs.push_back("training_log.csv");
  }
  if (options.histograms) {
    const HistogramPair h = histograms_for(spec, gallery, f.probes, result, options.bins);
    write_histogram_csv(p.out / "histograms.csv", p.out / "histogram_fit.csv", h);
    outputs.push_back("histograms.csv");
    outputs.push_back("histogram_fit.csv");
  }

  auto manifest = manifest_base("evaluate", config, p.dataset);
  manifest["results"] = {{"classifier", result.config},
                         {"dim", f.used_dim},
                         {"probes", result.pairs.size()},
                         {"identification_rate", round_rate(result.identification_rate)}};
  if (!log.loss.empty()) {
    manifest["results"]["epochs_run"] = log.epochs_run;
    manifest["results"]["final_loss"] = log.loss.back();
  }
  manifest["outputs"] = outputs;
  write_json(p.out / "manifest.json", manifest);

  fmt::print("{} on {} features (dim {}): identification rate {:.1f}% ({} probes, {:.2f} s)\n",
             result.config, config.transform, f.used_dim,
             round_rate(result.identification_rate), result.pairs.size(), elapsed(start));
  return 0;
}

int cmd_sweep(const RunConfig& config, const SweepOptions& options) {
  if (options.axis != "dim" && options.axis != "spread") {
    throw ArgumentError("--axis must be dim or spread");
  }
  std::vector<double> grid;
  if (options.grid_given) grid = parse_grid(options.grid);
  const Prepared p = prepare(config);
  auto manifest = manifest_base("sweep", config, p.dataset);
  std::vector<CurvePoint> curve;
  std::string file;
  std::string parameter;

  if (options.axis == "dim") {
    const ClassifierSpec spec = ClassifierSpec::parse(config.classifier);
    if (spec.kind != ClassifierSpec::Kind::kNearestNeighbor) {
      throw ArgumentError("dimension sweeps use nn:mad or nn:mse");
    }
    if (config.transform == "klt") {
      throw ArgumentError("dimension sweeps need a transform (dct, dft, logdft)");
    }
    if (options.shape != "rect" && options.shape != "sector") {
      throw ArgumentError("--shape must be rect or sector");
    }
    const auto shape = options.shape == "rect" ? ZonalMask::Shape::kRectangular
                                               : ZonalMask::Shape::kSectorial;
    if (!options.grid_given) {
      if (shape == ZonalMask::Shape::kRectangular) {
        const auto side_limit = std::min<Eigen::Index>(
            std::min(p.dataset.corpus.rows(), p.dataset.corpus.cols()),
            static_cast<Eigen::Index>(std::floor(std::sqrt(options.max_dim))));
        for (Eigen::Index n = 1; n <= side_limit; ++n) grid.push_back(static_cast<double>(n));
      } else {
        grid = sector_radius_grid(options.max_dim, p.dataset.corpus.rows(),
                                  p.dataset.corpus.cols());
      }
    }
    const TransformKind kind = parse_transform_kind(config.transform);
    const FeatureCache gallery(p.split.gallery, kind, config.log_offset, config.threads);
    const FeatureCache probes(p.split.probes, kind, config.log_offset, config.threads);
    curve = sweep_dimension(gallery, probes, shape, grid, spec.metric,
                            parse_reduction(config.reduction), config.threads);
    parameter = shape == ZonalMask::Shape::kRectangular ? "side" : "radius";
    file = "curve_dim.csv";
  } else {
    const ClassifierSpec spec = ClassifierSpec::parse(config.classifier);
    if (spec.kind != ClassifierSpec::Kind::kPnn && spec.kind != ClassifierSpec::Kind::kRbf) {
      throw ArgumentError("spread sweeps use --classifier pnn or rbf");
    }
    if (!options.grid_given) grid = default_spread_grid();
    const FeatureSets f = build_features(config, p.split);
    curve = sweep_spread(f.gallery, f.probes,
                         spec.kind == ClassifierSpec::Kind::kPnn ? SpreadClassifier::kPnn
                                                                 : SpreadClassifier::kRbf,
                         grid, classifier_options(config), config.threads);
    parameter = "spread";
    file = "curve_spread.csv";
  }

  write_curve_csv(p.out / file, curve, parameter);
  const CurvePoint peak = curve_peak(curve);
  manifest["sweep"] = {{"axis", options.axis}, {"shape", options.shape}, {"grid", grid}};
  manifest["results"] = {{"points", curve.size()},
                         {"peak_parameter", peak.parameter},
                         {"peak_dim", peak.dim},
                         {"peak_rate", round_rate(peak.rate)}};
  manifest["outputs"] = {file};
  write_json(p.out / "manifest.json", manifest);

  for (const auto& point : curve) {
    fmt::print("{}={} dim={} rate={:.1f}\n", parameter, format_double(point.parameter),
               point.dim, round_rate(point.rate));
  }
  fmt::print("peak: {}={} dim={} rate={:.1f}\n", parameter, format_double(peak.parameter),
             peak.dim, round_rate(peak.rate));
  return 0;
}

int cmd_table1(const RunConfig& config, const Table1Cli& options) {
  if (options.rows != "all" && options.rows != "nn") {
    throw ArgumentError("--rows must be all or nn");
  }
  const Prepared p = prepare(config);
  const std::string checksum = checksum_hex(corpus_checksum(p.dataset.corpus));
  if (!options.baseline_manifest.empty()) {
    std::ifstream in(options.baseline_manifest);
    std::string expected;
    try {
      if (!in) throw std::runtime_error("cannot open");
      const auto doc = nlohmann::json::parse(in);
      expected = doc.at("dataset").at("checksum").get<std::string>();
    } catch (const std::exception& e) {
      fmt::print(stderr, "warning: cannot read checksum from {}: {}\n",
                 options.baseline_manifest, e.what());
    }
    if (!expected.empty() && expected != checksum) {
      fmt::print(stderr,
                 "warning: dataset checksum {} differs from baseline {} in {}; continuing\n",
                 checksum, expected, options.baseline_manifest);
    }
  }

  Table1Options t;
  t.nn_rows_only = options.rows == "nn";
  t.classifiers = classifier_options(config);
  t.threads = config.threads;
  const auto start = Clock::now();
  const auto rows = table1_report(p.split, t);
  write_table1_csv(p.out / "table1.csv", rows);

  auto manifest = manifest_base("table1", config, p.dataset);
  manifest["table1"] = {{"rows", options.rows}, {"pnn_spread_grid", t.pnn_spread_grid}};
  manifest["outputs"] = {"table1.csv"};
  write_json(p.out / "manifest.json", manifest);

  fmt::print("{:<12} {:>4} {:>5}  {:<14} {:>9} {:>9}  {}\n", "feature", "dim", "used",
             "classifier", "reference", "measured", "note");
  for (const auto& r : rows) {
    fmt::print("{:<12} {:>4} {:>5}  {:<14} {:>9.1f} {:>9.1f}  {}\n", r.feature, r.dim,
               r.used_dim, r.classifier, r.reference_rate, round_rate(r.measured_rate),
               r.note);
  }
  fmt::print("{} rows in {:.1f} s\n", rows.size(), elapsed(start));
  return 0;
}

int cmd_reconstruct(const RunConfig& config, const ReconstructOptions& options) {
  validate(config);
  const Dataset dataset = load_dataset(config);
  const auto out = prepare_out(config);
  const Image* image = nullptr;
  for (const auto& img : dataset.corpus.images()) {
    if (img.subject_id == options.subject && img.sample_id == options.sample) image = &img;
  }
  if (image == nullptr) {
    throw ArgumentError(fmt::format("no image s{}/{} in the dataset", options.subject,
                                    options.sample));
  }
  const ZonalMask mask = ZonalMask::parse(config.mask);
  const CoeffMatrix coeffs = dct2(*image);
  const Eigen::MatrixXd rec = idct2(mask_apply(coeffs, mask));
  const double rel_error = (rec - image->pixels).norm() / image->pixels.norm();
  const double kept = static_cast<double>(mask.positions(coeffs.rows(), coeffs.cols()).size());
  const double energy =
      mask_apply(coeffs, mask).real().squaredNorm() / coeffs.real().squaredNorm();

  write_pgm(out / "original.pgm", image->pixels);
  write_pgm(out / "reconstructed.pgm", rec.cwiseMax(0.0).cwiseMin(1.0));
  write_pgm_rescaled(out / "dct_log_magnitude.pgm",
                     (coeffs.real().array().abs() + 1e-6).log().matrix());

  auto manifest = manifest_base("reconstruct", config, dataset);
  manifest["results"] = {{"subject", options.subject},
                         {"sample", options.sample},
                         {"coefficients_kept", kept},
                         {"reduction_factor", static_cast<double>(coeffs.real().size()) / kept},
                         {"energy_fraction", energy},
                         {"relative_l2_error", rel_error}};
  manifest["outputs"] = {"original.pgm", "reconstructed.pgm", "dct_log_magnitude.pgm"};
  write_json(out / "manifest.json", manifest);

  fmt::print("s{}/{} with {}: kept {} of {} coefficients, energy {:.4f}, relative L2 error "
             "{:.4f}\n",
             options.subject, options.sample, mask.describe(), kept, coeffs.real().size(),
             energy, rel_error);
  return 0;
}

int cmd_rank(const RunConfig& config) {
  const Prepared p = prepare(config);
  const FeatureSets f = build_features(config, p.split);
  const auto ranking = rank_features(f.gallery);
  write_ranking_csv(p.out / "ranking.csv", ranking);
  auto manifest = manifest_base("rank", config, p.dataset);
  manifest["outputs"] = {"ranking.csv"};
  write_json(p.out / "manifest.json", manifest);
  const std::size_t top = std::min<std::size_t>(10, ranking.size());
  for (std::size_t i = 0; i < top; ++i) {
    fmt::print("{:>3}. feature {:>4}  D = {:.4f}\n", i + 1, ranking[i].feature_index,
               ranking[i].aggregate_d);
  }
  return 0;
}

}  // namespace faceid::cli
