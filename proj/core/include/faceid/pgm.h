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
#include <span>
#include <vector>

#include <Eigen/Core>

#include "faceid/image.h"

namespace faceid {

// Parses a P2 (ASCII) or P5 (binary) graymap with maxval <= 255 and
// returns samples scaled to [0,1] by dividing by maxval.
Eigen::MatrixXd parse_pgm(std::span<const std::uint8_t> bytes);

// Reads a PGM file. Subject and sample ids are taken from an `sX/Y.pgm`
// layout when the path matches it, and left at 0 otherwise.
Image load_pgm(const std::filesystem::path& path);

// Encodes a [0,1] matrix as P5 with maxval 255. Values are clamped and
// rounded to the nearest 8-bit level.
std::vector<std::uint8_t> encode_pgm(const Eigen::MatrixXd& pixels);
void write_pgm(const std::filesystem::path& path, const Eigen::MatrixXd& pixels);

// Diagnostic export of arbitrary real data: linearly rescales [min,max]
// to [0,1] before encoding. Lossy.
void write_pgm_rescaled(const std::filesystem::path& path,
                        const Eigen::MatrixXd& values);

}  // namespace faceid
