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

#include "faceid/dataset.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "faceid/error.h"
#include "faceid/parallel.h"
#include "faceid/pgm.h"
#include "faceid/rng.h"

namespace faceid {

Corpus::Corpus(std::vector<Image> images, int n_subjects,
               int samples_per_subject)
    : images_(std::move(images)),
      n_subjects_(n_subjects),
      samples_per_subject_(samples_per_subject) {
  if (n_subjects < 1 || samples_per_subject < 1) {
    throw ArgumentError("corpus needs at least one subject and one sample");
  }
  const auto expected =
      static_cast<std::size_t>(n_subjects) * static_cast<std::size_t>(samples_per_subject);
  if (images_.size() != expected) {
    throw DataError(fmt::format("corpus expects {} images ({} x {}), got {}",
                                expected, n_subjects, samples_per_subject,
                                images_.size()));
  }
  std::sort(images_.begin(), images_.end(), [](const Image& a, const Image& b) {
    return std::pair(a.subject_id, a.sample_id) <
           std::pair(b.subject_id, b.sample_id);
  });
  std::map<int, int> per_subject;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Image& img = images_[i];
    if (img.rows() < 1 || img.cols() < 1) throw DataError("empty image in corpus");
    if (img.rows() != images_[0].rows() || img.cols() != images_[0].cols()) {
      throw DataError(fmt::format(
          "image s{}/{} is {}x{}, corpus images are {}x{}", img.subject_id,
          img.sample_id, img.rows(), img.cols(), images_[0].rows(),
          images_[0].cols()));
    }
    if (img.pixels.minCoeff() < 0.0 || img.pixels.maxCoeff() > 1.0) {
      throw DataError(fmt::format("image s{}/{} has pixels outside [0,1]",
                                  img.subject_id, img.sample_id));
    }
    if (i > 0 && img.subject_id == images_[i - 1].subject_id &&
        img.sample_id == images_[i - 1].sample_id) {
      throw DataError(fmt::format("duplicate image s{}/{}", img.subject_id,
                                  img.sample_id));
    }
    ++per_subject[img.subject_id];
  }
  if (static_cast<int>(per_subject.size()) != n_subjects) {
    throw DataError(fmt::format("corpus expects {} subjects, found {}",
                                n_subjects, per_subject.size()));
  }
  for (const auto& [subject, count] : per_subject) {
    if (count != samples_per_subject) {
      throw DataError(fmt::format("subject {} has {} samples, expected {}",
                                  subject, count, samples_per_subject));
    }
  }
}

Eigen::Index Corpus::rows() const {
  return images_.empty() ? 0 : images_.front().rows();
}

Eigen::Index Corpus::cols() const {
  return images_.empty() ? 0 : images_.front().cols();
}

Corpus load_orl(const std::filesystem::path& root, int n_subjects,
                int samples_per_subject) {
  if (!std::filesystem::is_directory(root)) {
    throw DataError("dataset root is not a directory: " + root.string());
  }
  std::vector<std::filesystem::path> paths;
  std::vector<std::string> gaps;
  for (int s = 1; s <= n_subjects; ++s) {
    for (int k = 1; k <= samples_per_subject; ++k) {
      auto path = root / fmt::format("s{}", s) / fmt::format("{}.pgm", k);
      if (std::filesystem::is_regular_file(path)) {
        paths.push_back(std::move(path));
      } else {
        gaps.push_back(fmt::format("s{}/{}", s, k));
      }
    }
  }
  if (!gaps.empty()) throw InventoryError(std::move(gaps));

  std::vector<Image> images(paths.size());
  parallel_for(paths.size(), 0, [&](std::size_t i) {
    images[i] = load_pgm(paths[i]);
  });
  return Corpus(std::move(images), n_subjects, samples_per_subject);
}

Corpus load_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw DataError("cannot open manifest " + manifest.string());
  const auto base = manifest.parent_path();

  struct Entry {
    std::filesystem::path path;
    int subject;
    int sample;
  };
  std::vector<Entry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string path;
    if (!(fields >> path)) continue;
    Entry e;
    if (!(fields >> e.subject >> e.sample) || e.subject < 1 || e.sample < 1) {
      throw DataError(fmt::format("{}:{}: expected `path subject_id sample_id`",
                                  manifest.string(), line_no));
    }
    e.path = std::filesystem::path(path);
    if (e.path.is_relative()) e.path = base / e.path;
    entries.push_back(std::move(e));
  }
  if (entries.empty()) throw DataError("manifest lists no images");

  std::vector<std::string> gaps;
  for (const auto& e : entries) {
    if (!std::filesystem::is_regular_file(e.path)) gaps.push_back(e.path.string());
  }
  if (!gaps.empty()) throw InventoryError(std::move(gaps));

  std::vector<Image> images(entries.size());
  parallel_for(entries.size(), 0, [&](std::size_t i) {
    images[i] = load_pgm(entries[i].path);
    images[i].subject_id = entries[i].subject;
    images[i].sample_id = entries[i].sample;
  });
  std::set<int> subjects;
  for (const auto& e : entries) subjects.insert(e.subject);
  const int n_subjects = static_cast<int>(subjects.size());
  if (entries.size() % subjects.size() != 0) {
    throw DataError("manifest subjects have unequal sample counts");
  }
  return Corpus(std::move(images), n_subjects,
                static_cast<int>(entries.size() / subjects.size()));
}

Split split_first_k(const Corpus& corpus, int k) {
  if (k < 1 || k >= corpus.samples_per_subject()) {
    throw ArgumentError(fmt::format(
        "split size k={} must satisfy 1 <= k < {}", k,
        corpus.samples_per_subject()));
  }
  Split split;
  const auto& images = corpus.images();
  // Images are sorted by (subject, sample), so position within the subject
  // block is the sample rank.
  const auto per = static_cast<std::size_t>(corpus.samples_per_subject());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i % per < static_cast<std::size_t>(k)) {
      split.gallery.push_back(images[i]);
    } else {
      split.probes.push_back(images[i]);
    }
  }
  return split;
}

Corpus synth_corpus(std::uint64_t seed, int n_subjects, int samples, int rows,
                    int cols) {
  if (n_subjects < 1 || samples < 1 || rows < 1 || cols < 1) {
    throw ArgumentError("synth_corpus counts must all be >= 1");
  }
  constexpr int kTerms = 6;
  constexpr double kPi = std::numbers::pi;
  Rng rng(seed);

  auto cosine_mixture = [&](Rng& r, int terms, double amplitude) {
    Eigen::MatrixXd field = Eigen::MatrixXd::Zero(rows, cols);
    for (int t = 0; t < terms; ++t) {
      const double fu = r.uniform(0.0, 3.0);
      const double fv = r.uniform(0.0, 3.0);
      const double pu = r.uniform(0.0, 2.0 * kPi);
      const double pv = r.uniform(0.0, 2.0 * kPi);
      const double a = amplitude * r.uniform(0.3, 1.0);
      for (int y = 0; y < rows; ++y) {
        const double cy = std::cos(kPi * fu * (y + 0.5) / rows + pu);
        for (int x = 0; x < cols; ++x) {
          field(y, x) += a * cy * std::cos(kPi * fv * (x + 0.5) / cols + pv);
        }
      }
    }
    return field;
  };

  std::vector<Image> images;
  images.reserve(static_cast<std::size_t>(n_subjects) * samples);
  for (int s = 1; s <= n_subjects; ++s) {
    Rng subject_rng(rng.next_u64());
    const Eigen::MatrixXd base =
        (0.5 + cosine_mixture(subject_rng, kTerms, 0.12).array()).matrix();
    for (int k = 1; k <= samples; ++k) {
      Rng sample_rng(subject_rng.next_u64());
      Eigen::MatrixXd pixels = base + cosine_mixture(sample_rng, 2, 0.02);
      const double shift = sample_rng.uniform(-0.02, 0.02);
      for (Eigen::Index i = 0; i < pixels.size(); ++i) {
        double v = pixels.data()[i] + shift + sample_rng.uniform(-0.02, 0.02);
        v = std::clamp(v, 0.0, 1.0);
        pixels.data()[i] = std::round(v * 255.0) / 255.0;
      }
      images.push_back(Image{std::move(pixels), s, k});
    }
  }
  return Corpus(std::move(images), n_subjects, samples);
}

std::uint64_t corpus_checksum(const Corpus& corpus) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&hash](std::uint64_t value, int bytes) {
    for (int i = 0; i < bytes; ++i) {
      hash ^= (value >> (8 * i)) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(corpus.n_subjects()), 4);
  mix(static_cast<std::uint64_t>(corpus.samples_per_subject()), 4);
  mix(static_cast<std::uint64_t>(corpus.rows()), 4);
  mix(static_cast<std::uint64_t>(corpus.cols()), 4);
  for (const Image& img : corpus.images()) {
    mix(static_cast<std::uint64_t>(img.subject_id), 4);
    mix(static_cast<std::uint64_t>(img.sample_id), 4);
    for (Eigen::Index r = 0; r < img.rows(); ++r) {
      for (Eigen::Index c = 0; c < img.cols(); ++c) {
        mix(static_cast<std::uint64_t>(std::lround(img.pixels(r, c) * 255.0)), 1);
      }
    }
  }
  return hash;
}

}  // namespace faceid
