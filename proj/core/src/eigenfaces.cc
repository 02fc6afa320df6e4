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

#include "faceid/eigenfaces.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "faceid/error.h"

namespace faceid {
namespace {

struct CentredGallery {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::VectorXd mean;
  Eigen::MatrixXd a;  // P x M, column i = Phi_i
  double mean_square_norm = 0.0;
};

CentredGallery centre(std::span<const Image> gallery) {
  if (gallery.empty()) throw ArgumentError("eigenbasis needs a nonempty gallery");
  CentredGallery g;
  g.rows = gallery.front().rows();
  g.cols = gallery.front().cols();
  const Eigen::Index p = g.rows * g.cols;
  const auto m = static_cast<Eigen::Index>(gallery.size());
  g.a.resize(p, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Image& img = gallery[static_cast<std::size_t>(i)];
    if (img.rows() != g.rows || img.cols() != g.cols) {
      throw ArgumentError("eigenbasis gallery images must share dimensions");
    }
    g.a.col(i) = flatten(img.pixels);
  }
  g.mean_square_norm = g.a.colwise().squaredNorm().mean();
  g.mean = g.a.rowwise().mean();
  g.a.colwise() -= g.mean;
  return g;
}

struct SmallEigen {
  Eigen::VectorXd values;   // descending, nonzero only
  Eigen::MatrixXd vectors;  // M x rank, matching columns
};

// Diagonalizes A^T A / M and keeps the directions above the zero threshold.
SmallEigen small_eigen(const CentredGallery& g) {
  const auto m = g.a.cols();
  const Eigen::MatrixXd gram = (g.a.transpose() * g.a) / static_cast<double>(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigen decomposition of the gallery Gram matrix failed");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return values(x) > values(y);
  });
  const double tol = static_cast<double>(m) *
                     std::numeric_limits<double>::epsilon() *
                     std::max(g.mean_square_norm, values.maxCoeff());
  SmallEigen out;
  std::vector<Eigen::Index> kept;
  for (auto idx : order) {
    if (values(idx) > tol) kept.push_back(idx);
  }
  const auto rank = static_cast<Eigen::Index>(kept.size());
  out.values.resize(rank);
  out.vectors.resize(m, rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    out.values(k) = values(kept[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = solver.eigenvectors().col(kept[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace

EigenBasis::EigenBasis(Eigen::Index rows, Eigen::Index cols,
                       Eigen::VectorXd mean_face, Eigen::MatrixXd eigenfaces,
                       Eigen::VectorXd eigenvalues)
    : rows_(rows),
      cols_(cols),
      mean_face_(std::move(mean_face)),
      eigenfaces_(std::move(eigenfaces)),
      eigenvalues_(std::move(eigenvalues)) {
  if (rows_ * cols_ != mean_face_.size() || eigenfaces_.rows() != mean_face_.size() ||
      eigenfaces_.cols() != eigenvalues_.size()) {
    throw ArgumentError("inconsistent eigenbasis dimensions");
  }
}

Eigen::MatrixXd EigenBasis::reconstruct(const Eigen::VectorXd& weights) const {
  if (weights.size() != size()) {
    throw ArgumentError(fmt::format("expected {} weights, got {}", size(), weights.size()));
  }
  return unflatten(mean_face_ + eigenfaces_ * weights, rows_, cols_);
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& pixels) {
  Eigen::VectorXd v(pixels.size());
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < pixels.rows(); ++r) {
    for (Eigen::Index c = 0; c < pixels.cols(); ++c) v(k++) = pixels(r, c);
  }
  return v;
}

Eigen::MatrixXd unflatten(const Eigen::VectorXd& v, Eigen::Index rows,
                          Eigen::Index cols) {
  if (v.size() != rows * cols) throw ArgumentError("unflatten size mismatch");
  Eigen::MatrixXd m(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = v(k++);
  }
  return m;
}

int eigen_rank(std::span<const Image> gallery) {
  return static_cast<int>(small_eigen(centre(gallery)).values.size());
}

EigenBasis train_eigenbasis(std::span<const Image> gallery, int m_prime,
                            RankPolicy policy) {
  if (m_prime < 1) throw ArgumentError("m_prime must be >= 1");
  const CentredGallery g = centre(gallery);
  const SmallEigen se = small_eigen(g);
  const int rank = static_cast<int>(se.values.size());
  if (m_prime > rank) {
    if (policy == RankPolicy::kStrict || rank == 0) throw RankError(m_prime, rank);
    m_prime = rank;
  }

  Eigen::MatrixXd faces = g.a * se.vectors.leftCols(m_prime);
  for (Eigen::Index k = 0; k < faces.cols(); ++k) {
    auto u = faces.col(k);
    u.normalize();
    Eigen::Index arg = 0;
    u.cwiseAbs().maxCoeff(&arg);
    if (u(arg) < 0.0) u = -u;
  }
  return EigenBasis(g.rows, g.cols, g.mean, std::move(faces),
                    se.values.head(m_prime));
}

FeatureVector project(const Eigen::MatrixXd& pixels, const EigenBasis& basis) {
  if (pixels.rows() != basis.rows() || pixels.cols() != basis.cols()) {
    throw ArgumentError(fmt::format("image is {}x{}, eigenbasis expects {}x{}",
                                    pixels.rows(), pixels.cols(), basis.rows(),
                                    basis.cols()));
  }
  FeatureVector out;
  out.source = FeatureSource::kKlt;
  out.coeffs = basis.eigenfaces().transpose() * (flatten(pixels) - basis.mean_face());
  return out;
}

FeatureVector project(const Image& image, const EigenBasis& basis) {
  FeatureVector out = project(image.pixels, basis);
  out.label = image.subject_id;
  out.sample_id = image.sample_id;
  return out;
}

}  // namespace faceid
