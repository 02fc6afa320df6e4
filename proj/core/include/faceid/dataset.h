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
#include <vector>

#include "faceid/image.h"

namespace faceid {

// A labelled face collection ordered by (subject_id, sample_id).
class Corpus {
 public:
  Corpus() = default;
  // Validates the n_subjects x samples_per_subject inventory, uniform image
  // dimensions, pixel range and id uniqueness, then sorts by (subject, sample).
  Corpus(std::vector<Image> images, int n_subjects, int samples_per_subject);

  const std::vector<Image>& images() const { return images_; }
  int n_subjects() const { return n_subjects_; }
  int samples_per_subject() const { return samples_per_subject_; }
  Eigen::Index rows() const;
  Eigen::Index cols() const;
  std::size_t size() const { return images_.size(); }

 private:
  std::vector<Image> images_;
  int n_subjects_ = 0;
  int samples_per_subject_ = 0;
};

struct Split {
  std::vector<Image> gallery;
  std::vector<Image> probes;
};

// Loads the standard ORL layout root/s1..s40/1..10.pgm. Every missing
// directory or file is collected and reported in one InventoryError.
Corpus load_orl(const std::filesystem::path& root, int n_subjects = 40,
                int samples_per_subject = 10);

// Loads a corpus from a manifest of `path subject_id sample_id` lines.
// Relative paths resolve against the manifest's directory; '#' starts a
// comment.
Corpus load_manifest(const std::filesystem::path& manifest);

// Gallery = samples 1..k of every subject, probes = samples k+1..K.
Split split_first_k(const Corpus& corpus, int k);

// Deterministic fixture: each subject gets a seeded mixture of
// low-frequency cosines, each sample adds a small seeded perturbation.
Corpus synth_corpus(std::uint64_t seed, int n_subjects, int samples, int rows,
                    int cols);

// FNV-1a over the 8-bit quantized pixels and ids, in corpus order.
std::uint64_t corpus_checksum(const Corpus& corpus);

}  // namespace faceid
