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

#include "run_config.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "faceid/error.h"
#include "faceid/eval.h"

namespace faceid::cli {
namespace {

Corpus load_synth(const std::string& spec) {
  std::vector<long long> v;
  std::stringstream in(spec);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw ArgumentError(fmt::format("bad --synth field '{}'", field));
    }
  }
  if (v.size() != 5) {
    throw ArgumentError("--synth expects seed,subjects,samples,rows,cols");
  }
  return synth_corpus(static_cast<std::uint64_t>(v[0]), static_cast<int>(v[1]),
                      static_cast<int>(v[2]), static_cast<int>(v[3]),
                      static_cast<int>(v[4]));
}

}  // namespace

Dataset load_dataset(const RunConfig& config) {
  std::string orl = config.orl;
  const int given = !config.orl.empty() + !config.manifest.empty() + !config.synth.empty();
  if (given > 1) {
    throw ArgumentError("give exactly one of --orl, --manifest, --synth");
  }
  if (given == 0) {
    if (const char* env = std::getenv("FACEID_ORL_ROOT"); env != nullptr && *env != '\0') {
      orl = env;
    } else {
      throw ArgumentError(
          "no dataset: pass --orl DIR, --manifest FILE or --synth SPEC "
          "(or set FACEID_ORL_ROOT)");
    }
  }

  if (!config.synth.empty()) return {load_synth(config.synth), "synth", config.synth};
  if (!config.manifest.empty()) {
    if (!std::filesystem::is_regular_file(config.manifest)) {
      throw ArgumentError("manifest file does not exist: " + config.manifest);
    }
    return {load_manifest(config.manifest), "manifest", config.manifest};
  }
  if (!std::filesystem::is_directory(orl)) {
    throw ArgumentError("dataset directory does not exist: " + orl);
  }
  return {load_orl(orl), "orl", orl};
}

void validate(const RunConfig& config) {
  ClassifierSpec::parse(config.classifier);
  parse_normalization(config.normalization);
  parse_normalization(config.mlp_normalization);
  parse_reduction(config.reduction);
  if (config.fusion_normalization != "minmax" && config.fusion_normalization != "zscore") {
    throw ArgumentError("--fusion-normalization must be minmax or zscore");
  }
  if (config.transform != "klt") {
    parse_transform_kind(config.transform);
    ZonalMask::parse(config.mask);
  }
}

ComplexReduction parse_reduction(const std::string& name) {
  if (name == "modulus") return ComplexReduction::kModulus;
  if (name == "interleaved") return ComplexReduction::kInterleaved;
  throw ArgumentError(fmt::format("unknown complex reduction '{}'", name));
}

ClassifierOptions classifier_options(const RunConfig& config) {
  ClassifierOptions o;
  o.mlp.hidden = config.hidden;
  o.mlp.epochs = config.epochs;
  o.mlp.gamma = config.gamma;
  o.mlp.seed = config.seed;
  o.mlp.normalization = parse_normalization(config.mlp_normalization);
  o.pnn_spread = config.pnn_spread;
  o.rbf_spread = config.rbf_spread;
  o.rbf_max_centers = config.max_centers;
  o.radial_normalization = parse_normalization(config.normalization);
  o.fusion_normalization = config.fusion_normalization == "zscore"
                               ? ScoreNormalization::kZScore
                               : ScoreNormalization::kMinMax;
  return o;
}

FeatureSets build_features(const RunConfig& config, const Split& split) {
  FeatureSets out;
  if (config.transform == "klt") {
    KltFeatures klt = klt_features(split, config.dim, config.threads);
    out.gallery = std::move(klt.gallery);
    out.probes = std::move(klt.probes);
    out.used_dim = klt.used_dim;
    return out;
  }
  const TransformKind kind = parse_transform_kind(config.transform);
  const ZonalMask mask = ZonalMask::parse(config.mask);
  const ComplexReduction reduction = parse_reduction(config.reduction);
  const FeatureCache gallery(split.gallery, kind, config.log_offset, config.threads);
  const FeatureCache probes(split.probes, kind, config.log_offset, config.threads);
  out.gallery = gallery.extract(mask, reduction);
  out.probes = probes.extract(mask, reduction);
  out.used_dim = static_cast<int>(out.gallery.front().dim());
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    if (field.empty()) continue;
    try {
      std::size_t used = 0;
      grid.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw ArgumentError(fmt::format("bad grid value '{}'", field));
    }
  }
  if (grid.empty()) throw ArgumentError("grid is empty");
  return grid;
}

std::string checksum_hex(std::uint64_t checksum) {
  return fmt::format("{:016x}", checksum);
}

nlohmann::json manifest_base(const std::string& command, const RunConfig& config,
                             const Dataset& dataset) {
  nlohmann::json cfg = {
      {"split_k", config.split_k},
      {"transform", config.transform},
      {"mask", config.mask},
      {"dim", config.dim},
      {"reduction", config.reduction},
      {"log_offset", config.log_offset},
      {"classifier", config.classifier},
      {"epochs", config.epochs},
      {"gamma", config.gamma},
      {"hidden", config.hidden},
      {"pnn_spread", config.pnn_spread},
      {"rbf_spread", config.rbf_spread},
      {"max_centers", config.max_centers},
      {"normalization", config.normalization},
      {"mlp_normalization", config.mlp_normalization},
      {"fusion_normalization", config.fusion_normalization},
  };
  return {
      {"tool", "faceid"},
      {"command", command},
      {"seed", config.seed},
      {"config", cfg},
      {"dataset",
       {{"source", dataset.source},
        {"location", dataset.location},
        {"images", dataset.corpus.size()},
        {"subjects", dataset.corpus.n_subjects()},
        {"samples_per_subject", dataset.corpus.samples_per_subject()},
        {"rows", dataset.corpus.rows()},
        {"cols", dataset.corpus.cols()},
        {"checksum", checksum_hex(corpus_checksum(dataset.corpus))}}},
  };
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

}  // namespace faceid::cli
