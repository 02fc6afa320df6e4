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

#include "faceid/pgm.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <regex>
#include <string>

#include "faceid/error.h"

namespace faceid {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }

  // Skips whitespace and '#' comments that run to end of line.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' &&
               bytes_[pos_] != '\r') {
          ++pos_;
        }
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  unsigned long read_uint(const char* field) {
    skip_separators();
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000UL) {
        throw ParseError(std::string(field) + " is too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(std::string("expected ") + field, start);
    }
    return value;
  }

  std::uint8_t byte_at(std::size_t i) const { return bytes_[i]; }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t size() const { return bytes_.size(); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path,
                const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

Eigen::MatrixXd parse_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw ParseError("missing P2/P5 magic number", 0);
  }
  const bool binary = bytes[1] == '5';
  HeaderReader reader(bytes);
  reader.advance(2);
  if (reader.pos() < bytes.size() && !std::isspace(bytes[reader.pos()]) &&
      bytes[reader.pos()] != '#') {
    throw ParseError("magic number must be followed by whitespace", reader.pos());
  }
  const auto width = reader.read_uint("width");
  const auto height = reader.read_uint("height");
  const std::size_t maxval_offset = reader.pos();
  const auto maxval = reader.read_uint("maxval");
  if (width == 0 || height == 0) {
    throw ParseError("image dimensions must be positive", maxval_offset);
  }
  if (maxval == 0 || maxval > 255) {
    throw ParseError("maxval must be in [1, 255]", maxval_offset);
  }

  const std::size_t count = width * height;
  Eigen::MatrixXd pixels(static_cast<Eigen::Index>(height),
                         static_cast<Eigen::Index>(width));
  const double denom = static_cast<double>(maxval);

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (reader.pos() >= bytes.size() || !std::isspace(bytes[reader.pos()])) {
      throw ParseError("expected whitespace after maxval", reader.pos());
    }
    const std::size_t start = reader.pos() + 1;
    const std::size_t available = bytes.size() - std::min(start, bytes.size());
    if (available < count) throw SizeMismatchError(count, available);
    for (std::size_t i = 0; i < count; ++i) {
      const auto value = bytes[start + i];
      if (value > maxval) {
        throw ParseError("sample exceeds maxval", start + i);
      }
      pixels(static_cast<Eigen::Index>(i / width),
             static_cast<Eigen::Index>(i % width)) = value / denom;
    }
    return pixels;
  }

  for (std::size_t i = 0; i < count; ++i) {
    reader.skip_separators();
    if (reader.pos() >= bytes.size()) throw SizeMismatchError(count, i);
    const std::size_t at = reader.pos();
    const auto value = reader.read_uint("sample");
    if (value > maxval) throw ParseError("sample exceeds maxval", at);
    pixels(static_cast<Eigen::Index>(i / width),
           static_cast<Eigen::Index>(i % width)) =
        static_cast<double>(value) / denom;
  }
  return pixels;
}

Image load_pgm(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  Image image;
  image.pixels = parse_pgm(bytes);

  static const std::regex subject_dir(R"(s(\d+))");
  static const std::regex sample_file(R"((\d+))");
  const std::string dir = path.parent_path().filename().string();
  const std::string stem = path.stem().string();
  std::smatch m;
  if (std::regex_match(dir, m, subject_dir)) image.subject_id = std::stoi(m[1]);
  if (std::regex_match(stem, m, sample_file)) image.sample_id = std::stoi(m[1]);
  return image;
}

std::vector<std::uint8_t> encode_pgm(const Eigen::MatrixXd& pixels) {
  const std::string header = "P5\n" + std::to_string(pixels.cols()) + " " +
                             std::to_string(pixels.rows()) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(header.size() + static_cast<std::size_t>(pixels.size()));
  for (Eigen::Index r = 0; r < pixels.rows(); ++r) {
    for (Eigen::Index c = 0; c < pixels.cols(); ++c) {
      const double v = std::clamp(pixels(r, c), 0.0, 1.0);
      bytes.push_back(static_cast<std::uint8_t>(std::lround(v * 255.0)));
    }
  }
  return bytes;
}

void write_pgm(const std::filesystem::path& path, const Eigen::MatrixXd& pixels) {
  write_file(path, encode_pgm(pixels));
}

void write_pgm_rescaled(const std::filesystem::path& path,
                        const Eigen::MatrixXd& values) {
  const double lo = values.minCoeff();
  const double hi = values.maxCoeff();
  if (hi > lo) {
    write_pgm(path, (values.array() - lo) / (hi - lo));
  } else {
    write_pgm(path, Eigen::MatrixXd::Zero(values.rows(), values.cols()));
  }
}

}  // namespace faceid
