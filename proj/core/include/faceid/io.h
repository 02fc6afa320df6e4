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
#include <string>
#include <vector>

#include "faceid/classifiers/mlp.h"
#include "faceid/eval.h"
#include "faceid/fusion.h"
#include "faceid/transforms.h"

namespace faceid {

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// `subject,sample,source,dim,c0,c1,...`; unlabelled vectors write subject 0.
void write_features_csv(const std::filesystem::path& path,
                        std::span<const FeatureVector> features);
std::vector<FeatureVector> read_features_csv(const std::filesystem::path& path);

// `<parameter_name>,dim,rate`
void write_curve_csv(const std::filesystem::path& path,
                     std::span<const CurvePoint> curve,
                     const std::string& parameter_name);

// `probe,sample,subject_true,subject_pred,correct`
void write_predictions_csv(const std::filesystem::path& path,
                           const ExperimentResult& result);

// `probe,subject_true,subject_pred,fused_score`, fused_score being the
// winning subject's fused score.
void write_fusion_report_csv(const std::filesystem::path& path,
                             const ExperimentResult& result);

// `epoch,loss`, epochs counted from 1.
void write_training_log_csv(const std::filesystem::path& path,
                            const MlpTrainingLog& log);

// `bin_lo,bin_hi,intra,inter` plus a companion `set,count,mean,std` file.
void write_histogram_csv(const std::filesystem::path& path,
                         const std::filesystem::path& fit_path,
                         const HistogramPair& histograms);

// `feature,dim,used_dim,classifier,reference_rate,measured_rate,note`
void write_table1_csv(const std::filesystem::path& path,
                      std::span<const Table1Row> rows);

}  // namespace faceid
