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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "faceid/error.h"

namespace faceid {
namespace {

constexpr double kPi = std::numbers::pi;

// Orthonormal DCT-II basis: row p holds alpha_p cos(pi (2m+1) p / 2n).
Eigen::MatrixXd dct_matrix(Eigen::Index n) {
  Eigen::MatrixXd c(n, n);
  const double a0 = 1.0 / std::sqrt(static_cast<double>(n));
  const double a = std::sqrt(2.0 / static_cast<double>(n));
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index m = 0; m < n; ++m) {
      c(p, m) = (p == 0 ? a0 : a) *
                std::cos(kPi * static_cast<double>((2 * m + 1) * p) /
                         (2.0 * static_cast<double>(n)));
    }
  }
  return c;
}

// Forward DFT kernel exp(-2 pi i p m / n), with p*m reduced mod n first so
// large indices do not lose phase accuracy.
Eigen::MatrixXcd dft_matrix(Eigen::Index n) {
  Eigen::MatrixXcd w(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index m = 0; m < n; ++m) {
      const double angle =
          -2.0 * kPi * static_cast<double>((p * m) % n) / static_cast<double>(n);
      w(p, m) = std::polar(1.0, angle);
    }
  }
  return w;
}

void require_nonempty(const Eigen::MatrixXd& pixels) {
  if (pixels.size() == 0) throw ArgumentError("transform of an empty image");
}

std::string trim_number(double v) { return fmt::format("{}", v); }

}  // namespace

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::kDct: return "dct";
    case TransformKind::kDft: return "dft";
    case TransformKind::kLogDft: return "logdft";
  }
  return "?";
}

std::string_view to_string(FeatureSource source) {
  switch (source) {
    case FeatureSource::kDct: return "dct";
    case FeatureSource::kDft: return "dft";
    case FeatureSource::kLogDft: return "logdft";
    case FeatureSource::kKlt: return "klt";
  }
  return "?";
}

TransformKind parse_transform_kind(std::string_view name) {
  if (name == "dct") return TransformKind::kDct;
  if (name == "dft" || name == "fft") return TransformKind::kDft;
  if (name == "logdft" || name == "logfft") return TransformKind::kLogDft;
  throw ArgumentError(fmt::format("unknown transform '{}'", name));
}

FeatureSource parse_feature_source(std::string_view name) {
  if (name == "klt") return FeatureSource::kKlt;
  return feature_source(parse_transform_kind(name));
}

FeatureSource feature_source(TransformKind kind) {
  switch (kind) {
    case TransformKind::kDct: return FeatureSource::kDct;
    case TransformKind::kDft: return FeatureSource::kDft;
    case TransformKind::kLogDft: return FeatureSource::kLogDft;
  }
  return FeatureSource::kDct;
}

CoeffMatrix::CoeffMatrix(TransformKind kind, Eigen::MatrixXd values)
    : kind_(kind), real_(std::move(values)) {
  if (kind_ != TransformKind::kDct) {
    throw ArgumentError("real coefficient storage requires kind dct");
  }
}

CoeffMatrix::CoeffMatrix(TransformKind kind, Eigen::MatrixXcd values)
    : kind_(kind), complex_(std::move(values)) {
  if (kind_ == TransformKind::kDct) {
    throw ArgumentError("DCT coefficients must be real");
  }
}

Eigen::Index CoeffMatrix::rows() const {
  return is_complex() ? complex_.rows() : real_.rows();
}

Eigen::Index CoeffMatrix::cols() const {
  return is_complex() ? complex_.cols() : real_.cols();
}

const Eigen::MatrixXd& CoeffMatrix::real() const {
  if (is_complex()) throw ArgumentError("coefficients are complex");
  return real_;
}

const Eigen::MatrixXcd& CoeffMatrix::complex() const {
  if (!is_complex()) throw ArgumentError("coefficients are real");
  return complex_;
}

ZonalMask ZonalMask::rectangular(int side, double r_low) {
  ZonalMask m;
  m.shape = Shape::kRectangular;
  m.side = side;
  m.r_low = r_low;
  if (side < 1) throw ArgumentError("rectangular mask side must be >= 1");
  if (r_low < 0.0) throw ArgumentError("band-pass radius must be >= 0");
  return m;
}

ZonalMask ZonalMask::sectorial(double radius, double r_low) {
  ZonalMask m;
  m.shape = Shape::kSectorial;
  m.radius = radius;
  m.r_low = r_low;
  if (!(radius > 0.0)) throw ArgumentError("sectorial mask radius must be > 0");
  if (r_low < 0.0) throw ArgumentError("band-pass radius must be >= 0");
  return m;
}

ZonalMask ZonalMask::parse(std::string_view spec) {
  std::string text(spec);
  double r_low = 0.0;
  if (auto comma = text.find(','); comma != std::string::npos) {
    const std::string extra = text.substr(comma + 1);
    text.erase(comma);
    if (extra.rfind("low:", 0) != 0) {
      throw ArgumentError(fmt::format("bad mask option '{}'", extra));
    }
    try {
      r_low = std::stod(extra.substr(4));
    } catch (const std::exception&) {
      throw ArgumentError(fmt::format("bad band-pass radius in '{}'", spec));
    }
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ArgumentError(fmt::format("mask '{}' must look like rect:N or sector:R", spec));
  }
  const std::string shape = text.substr(0, colon);
  const std::string value = text.substr(colon + 1);
  try {
    std::size_t used = 0;
    if (shape == "rect") {
      const int side = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      return rectangular(side, r_low);
    }
    if (shape == "sector") {
      const double radius = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      return sectorial(radius, r_low);
    }
  } catch (const std::logic_error&) {
    throw ArgumentError(fmt::format("bad mask size in '{}'", spec));
  }
  throw ArgumentError(fmt::format("unknown mask shape '{}'", shape));
}

bool ZonalMask::contains(Eigen::Index f1, Eigen::Index f2) const {
  const double radial = std::sqrt(static_cast<double>(f1 * f1 + f2 * f2));
  if (r_low > 0.0 && radial < r_low) return false;
  if (shape == Shape::kRectangular) return f1 < side && f2 < side;
  return radial < radius;
}

void ZonalMask::check_fits(Eigen::Index rows, Eigen::Index cols) const {
  const auto limit = static_cast<double>(std::min(rows, cols));
  const double extent =
      shape == Shape::kRectangular ? static_cast<double>(side) : radius;
  if (extent > limit) {
    throw ArgumentError(fmt::format("mask {} does not fit a {}x{} matrix",
                                    describe(), rows, cols));
  }
}

Eigen::MatrixXd ZonalMask::array(Eigen::Index rows, Eigen::Index cols) const {
  check_fits(rows, cols);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  for (const auto& [r, c] : positions(rows, cols)) m(r, c) = 1.0;
  return m;
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> ZonalMask::positions(
    Eigen::Index rows, Eigen::Index cols) const {
  check_fits(rows, cols);
  // Every retained position lies in the [0, extent) square.
  const double extent =
      shape == Shape::kRectangular ? static_cast<double>(side) : radius;
  const auto bound_r = std::min<Eigen::Index>(rows, static_cast<Eigen::Index>(std::ceil(extent)));
  const auto bound_c = std::min<Eigen::Index>(cols, static_cast<Eigen::Index>(std::ceil(extent)));
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  for (Eigen::Index r = 0; r < bound_r; ++r) {
    for (Eigen::Index c = 0; c < bound_c; ++c) {
      if (contains(r, c)) out.emplace_back(r, c);
    }
  }
  return out;
}

std::string ZonalMask::describe() const {
  std::string out = shape == Shape::kRectangular
                        ? fmt::format("rect:{}", side)
                        : "sector:" + trim_number(radius);
  if (r_low > 0.0) out += ",low:" + trim_number(r_low);
  return out;
}

CoeffMatrix dct2(const Eigen::MatrixXd& pixels) {
  require_nonempty(pixels);
  const Eigen::MatrixXd cm = dct_matrix(pixels.rows());
  const Eigen::MatrixXd cn = dct_matrix(pixels.cols());
  return CoeffMatrix(TransformKind::kDct,
                     Eigen::MatrixXd(cm * pixels * cn.transpose()));
}

CoeffMatrix dct2(const Image& image) { return dct2(image.pixels); }

Eigen::MatrixXd idct2(const CoeffMatrix& coeffs) {
  if (coeffs.kind() != TransformKind::kDct) {
    throw ArgumentError("idct2 requires DCT coefficients");
  }
  const Eigen::MatrixXd& b = coeffs.real();
  const Eigen::MatrixXd cm = dct_matrix(b.rows());
  const Eigen::MatrixXd cn = dct_matrix(b.cols());
  return cm.transpose() * b * cn;
}

CoeffMatrix dft2(const Eigen::MatrixXd& pixels) {
  require_nonempty(pixels);
  const Eigen::MatrixXcd wm = dft_matrix(pixels.rows());
  const Eigen::MatrixXcd wn = dft_matrix(pixels.cols());
  // The DFT kernel is symmetric, so W_N^T = W_N.
  Eigen::MatrixXcd f = wm * pixels.cast<std::complex<double>>() * wn;
  return CoeffMatrix(TransformKind::kDft, std::move(f));
}

CoeffMatrix dft2(const Image& image) { return dft2(image.pixels); }

CoeffMatrix log_dft2(const Eigen::MatrixXd& pixels, double offset) {
  if (!(offset > 0.0)) throw ArgumentError("log offset must be > 0");
  require_nonempty(pixels);
  const Eigen::MatrixXd logged = (pixels.array() + offset).log().matrix();
  return CoeffMatrix(TransformKind::kLogDft, dft2(logged).complex());
}

CoeffMatrix log_dft2(const Image& image, double offset) {
  return log_dft2(image.pixels, offset);
}

CoeffMatrix transform(const Image& image, TransformKind kind, double log_offset) {
  switch (kind) {
    case TransformKind::kDct: return dct2(image);
    case TransformKind::kDft: return dft2(image);
    case TransformKind::kLogDft: return log_dft2(image, log_offset);
  }
  throw ArgumentError("unknown transform kind");
}

FeatureVector extract_features(const CoeffMatrix& coeffs, const ZonalMask& mask,
                               ComplexReduction reduction) {
  const auto positions = mask.positions(coeffs.rows(), coeffs.cols());
  if (positions.empty()) {
    throw ArgumentError(fmt::format("mask {} retains no coefficients", mask.describe()));
  }
  FeatureVector out;
  out.source = feature_source(coeffs.kind());
  if (!coeffs.is_complex()) {
    const auto& b = coeffs.real();
    out.coeffs.resize(static_cast<Eigen::Index>(positions.size()));
    for (std::size_t i = 0; i < positions.size(); ++i) {
      out.coeffs(static_cast<Eigen::Index>(i)) = b(positions[i].first, positions[i].second);
    }
    return out;
  }
  const auto& f = coeffs.complex();
  if (reduction == ComplexReduction::kModulus) {
    out.coeffs.resize(static_cast<Eigen::Index>(positions.size()));
    for (std::size_t i = 0; i < positions.size(); ++i) {
      out.coeffs(static_cast<Eigen::Index>(i)) = std::abs(f(positions[i].first, positions[i].second));
    }
  } else {
    out.coeffs.resize(2 * static_cast<Eigen::Index>(positions.size()));
    for (std::size_t i = 0; i < positions.size(); ++i) {
      const auto z = f(positions[i].first, positions[i].second);
      out.coeffs(2 * static_cast<Eigen::Index>(i)) = z.real();
      out.coeffs(2 * static_cast<Eigen::Index>(i) + 1) = z.imag();
    }
  }
  return out;
}

CoeffMatrix mask_apply(const CoeffMatrix& coeffs, const ZonalMask& mask) {
  const Eigen::MatrixXd m = mask.array(coeffs.rows(), coeffs.cols());
  if (!coeffs.is_complex()) {
    return CoeffMatrix(coeffs.kind(), Eigen::MatrixXd(coeffs.real().cwiseProduct(m)));
  }
  return CoeffMatrix(coeffs.kind(),
                     Eigen::MatrixXcd(coeffs.complex().cwiseProduct(
                         m.cast<std::complex<double>>())));
}

}  // namespace faceid
