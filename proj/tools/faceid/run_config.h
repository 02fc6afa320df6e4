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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "faceid/classifier.h"
#include "faceid/dataset.h"
#include "faceid/transforms.h"

namespace faceid::cli {

// Options shared by every subcommand. Defaults reproduce the standard
// protocol: first five images per subject for enrollment, DCT with a 10x10
// zonal mask, MLP 100-40-40 for 15000 epochs.
struct RunConfig {
  std::string orl;
  std::string manifest;
  std::string synth;  // "seed,subjects,samples,rows,cols"
  int split_k = 5;

  std::string transform = "dct";  // dct, dft, logdft or klt
  std::string mask = "rect:10";
  int dim = 100;  // eigenface count for klt
  std::string reduction = "modulus";
  double log_offset = kDefaultLogOffset;

  std::string classifier = "nn:mad";
  std::uint64_t seed = 1;
  int epochs = 15000;
  double gamma = 0.9;
  int hidden = 40;
  double pnn_spread = 0.85;
  double rbf_spread = 0.85;
  int max_centers = 100;
  std::string normalization = "zscore-rms";
  std::string mlp_normalization = "zscore";
  std::string fusion_normalization = "minmax";

  unsigned threads = 0;
  std::string out = "faceid-out";
};

struct Dataset {
  Corpus corpus;
  std::string source;       // "orl", "manifest" or "synth"
  std::string location;     // path or synth spec
};

// Resolves the single dataset source (flags, then FACEID_ORL_ROOT) and loads
// it. Zero or several sources, or a missing path, raise ArgumentError.
Dataset load_dataset(const RunConfig& config);

// Validates the option values that have no CLI-level validator.
void validate(const RunConfig& config);

ClassifierOptions classifier_options(const RunConfig& config);
ComplexReduction parse_reduction(const std::string& name);

struct FeatureSets {
  std::vector<FeatureVector> gallery;
  std::vector<FeatureVector> probes;
  int used_dim = 0;
};
FeatureSets build_features(const RunConfig& config, const Split& split);

std::vector<double> parse_grid(const std::string& text);

// Manifest skeleton: config, seed and dataset identity. Deliberately free of
// timestamps and timings so repeated runs are byte-identical.
nlohmann::json manifest_base(const std::string& command, const RunConfig& config,
                             const Dataset& dataset);
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
std::string checksum_hex(std::uint64_t checksum);

}  // namespace faceid::cli
