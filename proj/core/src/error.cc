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

#include "faceid/error.h"

#include <fmt/format.h>

namespace faceid {
namespace {

std::string join_gaps(const std::vector<std::string>& gaps) {
  std::string out;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (i > 0) out += ", ";
    out += gaps[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t offset)
    : DataError(fmt::format("PGM parse error at byte {}: {}", offset, what)),
      offset_(offset) {}

SizeMismatchError::SizeMismatchError(std::size_t expected, std::size_t actual)
    : DataError(fmt::format("payload size mismatch: expected {} samples, got {}",
                            expected, actual)),
      expected_(expected),
      actual_(actual) {}

InventoryError::InventoryError(std::vector<std::string> gaps)
    : DataError(fmt::format("corpus inventory has {} gap(s): {}", gaps.size(),
                            join_gaps(gaps))),
      gaps_(std::move(gaps)) {}

RankError::RankError(int requested, int attainable)
    : NumericError(fmt::format(
          "requested {} eigenfaces but the gallery only supports {}", requested,
          attainable)),
      requested_(requested),
      attainable_(attainable) {}

DivergenceError::DivergenceError(int epoch)
    : NumericError(fmt::format("training diverged (non-finite loss) at epoch {}",
                               epoch)),
      epoch_(epoch) {}

}  // namespace faceid
