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

#include "faceid/transforms.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "faceid/error.h"
#include "oracles.h"

namespace faceid {
namespace {

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

TEST(Dct2Test, ConstantTwoByTwo) {
  const auto b = dct2(Eigen::MatrixXd::Ones(2, 2)).real();
  EXPECT_NEAR(b(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(b(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(b(1, 0), 0.0, 1e-15);
  EXPECT_NEAR(b(1, 1), 0.0, 1e-15);
}

TEST(Dct2Test, MatchesDirectSummation) {
  unsigned seed = 1;
  for (int m : {1, 2, 3, 4, 7, 12, 16}) {
    for (int n : {1, 4, 5, 16}) {
      const Eigen::MatrixXd a = testing::random_matrix(m, n, seed++);
      EXPECT_LT(max_abs(dct2(a).real() - testing::naive_dct2(a)), 1e-10)
          << m << "x" << n;
    }
  }
}

TEST(Dct2Test, Parseval) {
  for (unsigned seed = 0; seed < 10; ++seed) {
    const Eigen::MatrixXd a = testing::random_matrix(9 + seed, 13 + 2 * seed, seed, -1, 1);
    const double energy = a.squaredNorm();
    EXPECT_LT(std::abs(dct2(a).real().squaredNorm() - energy) / energy, 1e-9);
  }
}

TEST(Dct2Test, InversePair) {
  for (int size : {1, 8, 31, 64, 128}) {
    const Eigen::MatrixXd a = testing::random_matrix(size, size - size / 4, size);
    EXPECT_LT(max_abs(idct2(dct2(a)) - a), 1e-9) << size;
  }
  const Eigen::MatrixXd zero = idct2(CoeffMatrix(TransformKind::kDct, Eigen::MatrixXd(Eigen::MatrixXd::Zero(5, 3))));
  EXPECT_EQ(zero, Eigen::MatrixXd::Zero(5, 3));
}

TEST(Dct2Test, Linearity) {
  const Eigen::MatrixXd x = testing::random_matrix(11, 6, 3);
  const Eigen::MatrixXd y = testing::random_matrix(11, 6, 4);
  const double a = 1.75, b = -0.4;
  const Eigen::MatrixXd lhs = dct2(Eigen::MatrixXd(a * x + b * y)).real();
  const Eigen::MatrixXd rhs = a * dct2(x).real() + b * dct2(y).real();
  EXPECT_LT(max_abs(lhs - rhs), 1e-10);
}

TEST(Dct2Test, IdctRejectsComplexKinds) {
  const auto f = dft2(Eigen::MatrixXd::Ones(2, 2));
  EXPECT_THROW(idct2(f), ArgumentError);
}

TEST(Dft2Test, MatchesDirectSummation) {
  unsigned seed = 100;
  for (int m : {1, 2, 4, 5, 9, 16}) {
    for (int n : {1, 3, 4, 16}) {
      const Eigen::MatrixXd a = testing::random_matrix(m, n, seed++);
      EXPECT_LT(max_abs(dft2(a).complex() - testing::naive_dft2(a)), 1e-10)
          << m << "x" << n;
    }
  }
}

TEST(Dft2Test, ConstantImage) {
  const double c = 0.3;
  const auto f = dft2(Eigen::MatrixXd::Constant(6, 4, c)).complex();
  EXPECT_NEAR(f(0, 0).real(), 24 * c, 1e-12);
  EXPECT_NEAR(f(0, 0).imag(), 0.0, 1e-12);
  Eigen::MatrixXcd rest = f;
  rest(0, 0) = 0.0;
  EXPECT_LT(max_abs(rest), 1e-12);
}

TEST(Dft2Test, DcEqualsPixelSum) {
  const Eigen::MatrixXd a = testing::random_matrix(7, 5, 8);
  EXPECT_NEAR(dft2(a).complex()(0, 0).real(), a.sum(), 1e-12);
}

TEST(Dft2Test, ConjugateSymmetry) {
  const Eigen::Index m = 7, n = 6;
  const auto f = dft2(testing::random_matrix(m, n, 21)).complex();
  for (Eigen::Index p = 0; p < m; ++p) {
    for (Eigen::Index q = 0; q < n; ++q) {
      const auto mirror = std::conj(f((m - p) % m, (n - q) % n));
      EXPECT_LT(std::abs(f(p, q) - mirror), 1e-10);
    }
  }
}

TEST(LogDft2Test, ConstantAfterLogIsOnlyDc) {
  const double offset = 1e-4;
  const Eigen::MatrixXd a = Eigen::MatrixXd::Constant(4, 5, std::numbers::e - offset);
  Eigen::MatrixXcd f = log_dft2(a, offset).complex();
  EXPECT_NEAR(f(0, 0).real(), 20.0, 1e-12);
  f(0, 0) = 0.0;
  EXPECT_LT(max_abs(f), 1e-12);
}

TEST(LogDft2Test, ZeroPixelsStayFinite) {
  const auto f = log_dft2(Eigen::MatrixXd::Zero(3, 3)).complex();
  EXPECT_TRUE(f.allFinite());
  EXPECT_NEAR(f(0, 0).real(), 9 * std::log(1e-4), 1e-9);
}

TEST(LogDft2Test, HomomorphicAdditivity) {
  const Eigen::MatrixXd i = testing::random_matrix(12, 10, 5, 0.1, 1.0);
  const Eigen::MatrixXd r = testing::random_matrix(12, 10, 6, 0.2, 0.9);
  const Eigen::MatrixXd f = i.cwiseProduct(r);
  const double offset = 1e-12;
  const Eigen::MatrixXcd diff = log_dft2(f, offset).complex() -
                                log_dft2(i, offset).complex() -
                                log_dft2(r, offset).complex();
  EXPECT_LT(max_abs(diff), 1e-6);
}

TEST(LogDft2Test, NonPositiveOffsetIsArgumentError) {
  EXPECT_THROW(log_dft2(Eigen::MatrixXd::Ones(2, 2), 0.0), ArgumentError);
  EXPECT_THROW(log_dft2(Eigen::MatrixXd::Ones(2, 2), -1.0), ArgumentError);
}

TEST(ZonalMaskTest, RectangularOneIsDc) {
  const Eigen::MatrixXd a = testing::random_matrix(8, 6, 2);
  const auto coeffs = dct2(a);
  const auto v = extract_features(coeffs, ZonalMask::rectangular(1));
  ASSERT_EQ(v.dim(), 1);
  EXPECT_EQ(v.coeffs(0), coeffs.real()(0, 0));
  EXPECT_EQ(v.source, FeatureSource::kDct);
}

TEST(ZonalMaskTest, RectangularTenOnFaceSizedImage) {
  const auto coeffs = dct2(testing::random_matrix(112, 92, 4));
  const auto v = extract_features(coeffs, ZonalMask::rectangular(10));
  EXPECT_EQ(v.dim(), 100);
  // Row-major scan: element 13 is (1, 3).
  EXPECT_EQ(v.coeffs(13), coeffs.real()(1, 3));
}

TEST(ZonalMaskTest, RectangularDimIsSideSquared) {
  const auto coeffs = dct2(testing::random_matrix(20, 15, 4));
  for (int side = 1; side <= 15; ++side) {
    EXPECT_EQ(extract_features(coeffs, ZonalMask::rectangular(side)).dim(), side * side);
  }
}

TEST(ZonalMaskTest, SectorRadiusTwoKeepsFourPositions) {
  // Enumerate the strict inequality directly.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> expected;
  for (Eigen::Index f1 = 0; f1 < 10; ++f1) {
    for (Eigen::Index f2 = 0; f2 < 10; ++f2) {
      if (std::sqrt(double(f1 * f1 + f2 * f2)) < 2.0) expected.emplace_back(f1, f2);
    }
  }
  const auto got = ZonalMask::sectorial(2.0).positions(10, 10);
  EXPECT_EQ(got, expected);
  ASSERT_EQ(got.size(), 4u);
  EXPECT_EQ(got[3], (std::pair<Eigen::Index, Eigen::Index>{1, 1}));
}

TEST(ZonalMaskTest, MaskEntriesAreZeroOrOne) {
  const auto m = ZonalMask::sectorial(5.5, 1.0).array(9, 8);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    EXPECT_TRUE(m.data()[i] == 0.0 || m.data()[i] == 1.0);
  }
  EXPECT_EQ(m(0, 0), 0.0);
  EXPECT_EQ(m(1, 0), 1.0);
}

TEST(ZonalMaskTest, ComplexReductions) {
  const auto f = dft2(testing::random_matrix(6, 6, 9));
  const auto mod = extract_features(f, ZonalMask::rectangular(2));
  const auto pairs = extract_features(f, ZonalMask::rectangular(2), ComplexReduction::kInterleaved);
  ASSERT_EQ(mod.dim(), 4);
  ASSERT_EQ(pairs.dim(), 8);
  EXPECT_EQ(mod.source, FeatureSource::kDft);
  EXPECT_EQ(mod.coeffs(1), std::abs(f.complex()(0, 1)));
  EXPECT_EQ(pairs.coeffs(2), f.complex()(0, 1).real());
  EXPECT_EQ(pairs.coeffs(3), f.complex()(0, 1).imag());
}

TEST(ZonalMaskTest, ExtractionIsDeterministic) {
  const auto coeffs = log_dft2(testing::random_matrix(16, 12, 1));
  const auto a = extract_features(coeffs, ZonalMask::sectorial(7.3));
  const auto b = extract_features(coeffs, ZonalMask::sectorial(7.3));
  EXPECT_EQ(a.coeffs, b.coeffs);
}

TEST(ZonalMaskTest, OversizedMaskIsArgumentError) {
  const auto coeffs = dct2(testing::random_matrix(5, 4, 1));
  EXPECT_THROW(extract_features(coeffs, ZonalMask::rectangular(5)), ArgumentError);
  EXPECT_THROW(mask_apply(coeffs, ZonalMask::sectorial(4.5)), ArgumentError);
  EXPECT_THROW(ZonalMask::rectangular(0), ArgumentError);
  EXPECT_THROW(ZonalMask::sectorial(0.0), ArgumentError);
}

TEST(ZonalMaskTest, ParseAndDescribe) {
  const auto r = ZonalMask::parse("rect:10");
  EXPECT_EQ(r.shape, ZonalMask::Shape::kRectangular);
  EXPECT_EQ(r.side, 10);
  const auto s = ZonalMask::parse("sector:12.5,low:1.5");
  EXPECT_EQ(s.shape, ZonalMask::Shape::kSectorial);
  EXPECT_EQ(s.radius, 12.5);
  EXPECT_EQ(s.r_low, 1.5);
  EXPECT_EQ(s.describe(), "sector:12.5,low:1.5");
  EXPECT_THROW(ZonalMask::parse("circle:3"), ArgumentError);
  EXPECT_THROW(ZonalMask::parse("rect:x"), ArgumentError);
}

TEST(MaskApplyTest, FullMaskIsIdentity) {
  const auto coeffs = dct2(testing::random_matrix(7, 7, 12));
  EXPECT_EQ(mask_apply(coeffs, ZonalMask::rectangular(7)).real(), coeffs.real());
}

TEST(MaskApplyTest, EmptyZoneGivesZeroMatrix) {
  // A band-pass floor beyond every radius retains nothing.
  const auto coeffs = dct2(testing::random_matrix(4, 4, 12));
  const auto zero = mask_apply(coeffs, ZonalMask::rectangular(4, 100.0));
  EXPECT_EQ(zero.real(), Eigen::MatrixXd::Zero(4, 4));
  EXPECT_THROW(extract_features(coeffs, ZonalMask::rectangular(4, 100.0)), ArgumentError);
}

TEST(MaskApplyTest, LowPassReconstructionError) {
  const Eigen::MatrixXd a = testing::random_matrix(16, 16, 2);
  const auto kept = mask_apply(dct2(a), ZonalMask::rectangular(8));
  const Eigen::MatrixXd rec = idct2(kept);
  // Orthonormality: the residual energy equals the energy of the dropped coefficients.
  const double dropped = dct2(a).real().squaredNorm() - kept.real().squaredNorm();
  EXPECT_NEAR((rec - a).squaredNorm(), dropped, 1e-9);
}

TEST(TransformNamesTest, RoundTrip) {
  for (auto kind : {TransformKind::kDct, TransformKind::kDft, TransformKind::kLogDft}) {
    EXPECT_EQ(parse_transform_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_transform_kind("wavelet"), ArgumentError);
}

}  // namespace
}  // namespace faceid
