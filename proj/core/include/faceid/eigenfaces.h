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

#include <filesystem>
#include <span>

#include <Eigen/Core>

#include "faceid/image.h"
#include "faceid/transforms.h"

namespace faceid {

// Mean face plus M' unit-norm eigenfaces (columns), eigenvalues descending.
class EigenBasis {
 public:
  EigenBasis(Eigen::Index rows, Eigen::Index cols, Eigen::VectorXd mean_face,
             Eigen::MatrixXd eigenfaces, Eigen::VectorXd eigenvalues);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  Eigen::Index pixel_count() const { return mean_face_.size(); }
  Eigen::Index size() const { return eigenfaces_.cols(); }

  const Eigen::VectorXd& mean_face() const { return mean_face_; }
  const Eigen::MatrixXd& eigenfaces() const { return eigenfaces_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

  // Psi + sum_k w_k u_k, reshaped to rows x cols.
  Eigen::MatrixXd reconstruct(const Eigen::VectorXd& weights) const;

 private:
  Eigen::Index rows_;
  Eigen::Index cols_;
  Eigen::VectorXd mean_face_;
  Eigen::MatrixXd eigenfaces_;
  Eigen::VectorXd eigenvalues_;
};

// Row-major flattening used for every face vector in this module.
Eigen::VectorXd flatten(const Eigen::MatrixXd& pixels);
Eigen::MatrixXd unflatten(const Eigen::VectorXd& v, Eigen::Index rows,
                          Eigen::Index cols);

// Number of nonzero-eigenvalue directions of the centred gallery.
int eigen_rank(std::span<const Image> gallery);

enum class RankPolicy {
  kStrict,  // m_prime above the rank throws RankError
  kClamp,   // silently keep only the attainable directions
};

// Eigenfaces through the small M x M matrix A^T A / M, lifted with
// u_l = A v_l and normalized to unit length. Eigenvalues at or below
// M * eps * lambda_max count as zero and are dropped before selecting
// m_prime directions. Each eigenface's largest-magnitude entry is positive.
EigenBasis train_eigenbasis(std::span<const Image> gallery, int m_prime,
                            RankPolicy policy = RankPolicy::kStrict);

// omega_k = u_k^T (I - Psi).
FeatureVector project(const Image& image, const EigenBasis& basis);
FeatureVector project(const Eigen::MatrixXd& pixels, const EigenBasis& basis);

void save_eigenbasis(const std::filesystem::path& path,
                     const EigenBasis& basis);
EigenBasis load_eigenbasis(const std::filesystem::path& path);

}  // namespace faceid
