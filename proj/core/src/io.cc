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

#include "faceid/io.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "faceid/error.h"

namespace faceid {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

// Quotes a free-text CSV field when it contains a separator or quote.
std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double value) { return fmt::format("{}", value); }

void write_features_csv(const std::filesystem::path& path,
                        std::span<const FeatureVector> features) {
  auto out = open_out(path);
  Eigen::Index width = 0;
  for (const auto& f : features) width = std::max(width, f.dim());
  out << "subject,sample,source,dim";
  for (Eigen::Index i = 0; i < width; ++i) out << ",c" << i;
  out << '\n';
  for (const auto& f : features) {
    out << f.label.value_or(0) << ',' << f.sample_id << ',' << to_string(f.source)
        << ',' << f.dim();
    for (Eigen::Index i = 0; i < f.dim(); ++i) out << ',' << format_double(f.coeffs(i));
    for (Eigen::Index i = f.dim(); i < width; ++i) out << ',';
    out << '\n';
  }
}

std::vector<FeatureVector> read_features_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("subject,sample,source,dim", 0) != 0) {
    throw DataError(path.string() + ": missing feature CSV header");
  }
  std::vector<FeatureVector> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    try {
      if (fields.size() < 4) throw std::invalid_argument("short row");
      FeatureVector f;
      const int subject = std::stoi(fields[0]);
      if (subject != 0) f.label = subject;
      f.sample_id = std::stoi(fields[1]);
      f.source = parse_feature_source(fields[2]);
      const auto dim = static_cast<std::size_t>(std::stoul(fields[3]));
      if (fields.size() < 4 + dim) throw std::invalid_argument("short row");
      f.coeffs.resize(static_cast<Eigen::Index>(dim));
      for (std::size_t i = 0; i < dim; ++i) {
        f.coeffs(static_cast<Eigen::Index>(i)) = std::stod(fields[4 + i]);
      }
      out.push_back(std::move(f));
    } catch (const std::exception& e) {
      throw DataError(fmt::format("{}:{}: malformed feature row ({})",
                                  path.string(), line_no, e.what()));
    }
  }
  return out;
}

void write_curve_csv(const std::filesystem::path& path,
                     std::span<const CurvePoint> curve,
                     const std::string& parameter_name) {
  auto out = open_out(path);
  out << parameter_name << ",dim,rate\n";
  for (const auto& p : curve) {
    out << format_double(p.parameter) << ',' << p.dim << ','
        << format_double(round_rate(p.rate)) << '\n';
  }
}

void write_predictions_csv(const std::filesystem::path& path,
                           const ExperimentResult& result) {
  auto out = open_out(path);
  out << "probe,sample,subject_true,subject_pred,correct\n";
  for (std::size_t i = 0; i < result.pairs.size(); ++i) {
    const auto& p = result.pairs[i];
    const int sample = i < result.probe_samples.size() ? result.probe_samples[i] : 0;
    out << i << ',' << sample << ',' << p.truth << ',' << p.predicted << ','
        << (p.truth == p.predicted ? 1 : 0) << '\n';
  }
}

void write_fusion_report_csv(const std::filesystem::path& path,
                             const ExperimentResult& result) {
  auto out = open_out(path);
  out << "probe,subject_true,subject_pred,fused_score\n";
  for (std::size_t i = 0; i < result.pairs.size(); ++i) {
    const auto& p = result.pairs[i];
    const auto& s = result.scores.at(i);
    out << i << ',' << p.truth << ',' << p.predicted << ','
        << format_double(s.scores.at(s.best_index())) << '\n';
  }
}

void write_training_log_csv(const std::filesystem::path& path,
                            const MlpTrainingLog& log) {
  auto out = open_out(path);
  out << "epoch,loss\n";
  for (std::size_t e = 0; e < log.loss.size(); ++e) {
    out << (e + 1) << ',' << format_double(log.loss[e]) << '\n';
  }
}

void write_histogram_csv(const std::filesystem::path& path,
                         const std::filesystem::path& fit_path,
                         const HistogramPair& h) {
  auto out = open_out(path);
  out << "bin_lo,bin_hi,intra,inter\n";
  for (std::size_t b = 0; b + 1 < h.edges.size(); ++b) {
    out << format_double(h.edges[b]) << ',' << format_double(h.edges[b + 1]) << ','
        << h.intra_counts[b] << ',' << h.inter_counts[b] << '\n';
  }
  auto fits = open_out(fit_path);
  fits << "set,count,mean,std\n";
  auto row = [&fits](const char* name, std::size_t count,
                     const std::optional<GaussianFit>& fit) {
    fits << name << ',' << count << ',';
    if (fit) {
      fits << format_double(fit->mean) << ',' << format_double(fit->stddev);
    } else {
      fits << ',';
    }
    fits << '\n';
  };
  row("intra", h.intra.size(), h.intra_fit);
  row("inter", h.inter.size(), h.inter_fit);
}

void write_table1_csv(const std::filesystem::path& path,
                      std::span<const Table1Row> rows) {
  auto out = open_out(path);
  out << "feature,dim,used_dim,classifier,reference_rate,measured_rate,note\n";
  for (const auto& r : rows) {
    out << r.feature << ',' << r.dim << ',' << r.used_dim << ','
        << csv_text(r.classifier) << ',' << format_double(r.reference_rate) << ','
        << format_double(round_rate(r.measured_rate)) << ',' << csv_text(r.note)
        << '\n';
  }
}

}  // namespace faceid
