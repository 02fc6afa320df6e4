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

#include <string>

#include "run_config.h"

namespace faceid::cli {

struct SweepOptions {
  std::string axis = "dim";  // dim or spread
  std::string shape = "rect";
  std::string grid;  // empty: built-in grid for the axis
  bool grid_given = false;
  int max_dim = 900;
};

struct EvaluateOptions {
  bool histograms = false;
  int bins = 50;
};

struct Table1Cli {
  std::string rows = "all";  // all or nn
  std::string baseline_manifest;
};

struct ReconstructOptions {
  int subject = 1;
  int sample = 1;
};

int cmd_extract(const RunConfig& config);
int cmd_evaluate(const RunConfig& config, const EvaluateOptions& options);
int cmd_sweep(const RunConfig& config, const SweepOptions& options);
int cmd_table1(const RunConfig& config, const Table1Cli& options);
int cmd_reconstruct(const RunConfig& config, const ReconstructOptions& options);
int cmd_rank(const RunConfig& config);

}  // namespace faceid::cli
