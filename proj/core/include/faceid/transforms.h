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
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "faceid/image.h"

namespace faceid {

enum class TransformKind { kDct, kDft, kLogDft };

// Origin of a feature vector; kKlt marks eigenface projections.
enum class FeatureSource { kDct, kDft, kLogDft, kKlt };

std::string_view to_string(TransformKind kind);
std::string_view to_string(FeatureSource source);
TransformKind parse_transform_kind(std::string_view name);
FeatureSource parse_feature_source(std::string_view name);
FeatureSource feature_source(TransformKind kind);

// Transform-domain image. DCT coefficients live in real(); DFT and log-DFT
// coefficients live in complex(). Dimensions always match the source image.
class CoeffMatrix {
 public:
  CoeffMatrix(TransformKind kind, Eigen::MatrixXd values);
  CoeffMatrix(TransformKind kind, Eigen::MatrixXcd values);

  TransformKind kind() const { return kind_; }
  bool is_complex() const { return kind_ != TransformKind::kDct; }
  Eigen::Index rows() const;
  Eigen::Index cols() const;

  // Throw ArgumentError when the storage does not match the kind.
  const Eigen::MatrixXd& real() const;
  const Eigen::MatrixXcd& complex() const;

 private:
  TransformKind kind_;
  Eigen::MatrixXd real_;
  Eigen::MatrixXcd complex_;
};

// Zone of retained coefficients anchored at the frequency origin (0,0).
//
// Rectangular(N') keeps rows [0,N') x cols [0,N'). Sectorial(r) keeps the
// quarter disc sqrt(f1^2 + f2^2) < r. A band-pass lower radius r_low > 0
// additionally drops every position with sqrt(f1^2 + f2^2) < r_low.
struct ZonalMask {
  enum class Shape { kRectangular, kSectorial };

  Shape shape = Shape::kRectangular;
  int side = 1;
  double radius = 1.0;
  double r_low = 0.0;

  static ZonalMask rectangular(int side, double r_low = 0.0);
  static ZonalMask sectorial(double radius, double r_low = 0.0);
  // "rect:10", "sector:12.5", optionally suffixed ",low:1.5".
  static ZonalMask parse(std::string_view spec);

  bool contains(Eigen::Index f1, Eigen::Index f2) const;
  // Throws ArgumentError when the zone does not fit a rows x cols matrix.
  void check_fits(Eigen::Index rows, Eigen::Index cols) const;
  // 0/1 array of the given size.
  Eigen::MatrixXd array(Eigen::Index rows, Eigen::Index cols) const;
  // Retained positions in row-major scan order.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> positions(
      Eigen::Index rows, Eigen::Index cols) const;
  std::string describe() const;
};

// How complex coefficients become real features: |F| per position, or
// (Re, Im) pairs which double the dimension.
enum class ComplexReduction { kModulus, kInterleaved };

struct FeatureVector {
  Eigen::VectorXd coeffs;
  FeatureSource source = FeatureSource::kDct;
  std::optional<int> label;
  int sample_id = 0;

  Eigen::Index dim() const { return coeffs.size(); }
};

// Orthonormal 2-D DCT-II, evaluated separably as C_M * A * C_N^T.
CoeffMatrix dct2(const Eigen::MatrixXd& pixels);
CoeffMatrix dct2(const Image& image);

// Inverse of dct2. Throws ArgumentError for a non-DCT matrix.
Eigen::MatrixXd idct2(const CoeffMatrix& coeffs);

// Unnormalized forward DFT, F(0,0) equals the pixel sum.
CoeffMatrix dft2(const Eigen::MatrixXd& pixels);
CoeffMatrix dft2(const Image& image);

// DFT of ln(pixels + offset). offset must be > 0.
inline constexpr double kDefaultLogOffset = 1e-4;
CoeffMatrix log_dft2(const Eigen::MatrixXd& pixels,
                     double offset = kDefaultLogOffset);
CoeffMatrix log_dft2(const Image& image, double offset = kDefaultLogOffset);

CoeffMatrix transform(const Image& image, TransformKind kind,
                      double log_offset = kDefaultLogOffset);

FeatureVector extract_features(
    const CoeffMatrix& coeffs, const ZonalMask& mask,
    ComplexReduction reduction = ComplexReduction::kModulus);

// Pointwise product with the mask array; keeps the coefficient kind.
CoeffMatrix mask_apply(const CoeffMatrix& coeffs, const ZonalMask& mask);

}  // namespace faceid
