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

#include "faceid/classifiers/mlp.h"
#include "faceid/classifiers/pnn.h"
#include "faceid/classifiers/rbf.h"

namespace faceid {

// Models are stored as versioned JSON documents tagged with their kind.
// Doubles are written in shortest round-trip form, so save/load is
// bit-exact.
inline constexpr int kModelFormatVersion = 1;

void save_model(const std::filesystem::path& path, const MlpModel& model);
void save_model(const std::filesystem::path& path, const PnnModel& model);
void save_model(const std::filesystem::path& path, const RbfModel& model);

MlpModel load_mlp_model(const std::filesystem::path& path);
PnnModel load_pnn_model(const std::filesystem::path& path);
RbfModel load_rbf_model(const std::filesystem::path& path);

}  // namespace faceid
