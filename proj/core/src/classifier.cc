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

#include "faceid/classifier.h"

#include <fmt/format.h>

#include "faceid/classifiers/pnn.h"
#include "faceid/classifiers/rbf.h"
#include "faceid/error.h"

namespace faceid {
namespace {

class NearestNeighbor final : public Classifier {
 public:
  NearestNeighbor(const Gallery& gallery, Metric metric)
      : gallery_(gallery), metric_(metric) {}
  Classification classify(const FeatureVector& probe) const override {
    return nn_classify(probe, gallery_, metric_);
  }
  std::string id() const override { return fmt::format("nn:{}", to_string(metric_)); }

 private:
  Gallery gallery_;
  Metric metric_;
};

class Mlp final : public Classifier {
 public:
  explicit Mlp(MlpModel model) : model_(std::move(model)) {}
  Classification classify(const FeatureVector& probe) const override {
    return mlp_classify(model_, probe);
  }
  std::string id() const override { return "mlp"; }

 private:
  MlpModel model_;
};

class Pnn final : public Classifier {
 public:
  explicit Pnn(PnnModel model) : model_(std::move(model)) {}
  Classification classify(const FeatureVector& probe) const override {
    return pnn_classify(model_, probe);
  }
  std::string id() const override { return "pnn"; }

 private:
  PnnModel model_;
};

class Rbf final : public Classifier {
 public:
  explicit Rbf(RbfModel model) : model_(std::move(model)) {}
  Classification classify(const FeatureVector& probe) const override {
    return rbf_classify(model_, probe);
  }
  std::string id() const override { return "rbf"; }

 private:
  RbfModel model_;
};

class MeanFusion final : public Classifier {
 public:
  MeanFusion(std::vector<std::unique_ptr<Classifier>> members,
             ScoreNormalization normalization)
      : members_(std::move(members)), normalization_(normalization) {}

  Classification classify(const FeatureVector& probe) const override {
    std::vector<NormalizedScoreSet> sets;
    sets.reserve(members_.size());
    for (const auto& m : members_) {
      sets.push_back(normalize_scores(m->classify(probe).scores, normalization_));
    }
    FusionResult fused = fuse_mean(sets);
    Classification out;
    out.subject = fused.subject;
    out.scores.subjects = std::move(fused.fused.subjects);
    out.scores.scores = std::move(fused.fused.scores);
    out.scores.polarity = Polarity::kHigherIsBetter;
    out.scores.classifier_id = id();
    return out;
  }

  std::string id() const override {
    std::string out = "fusion:";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i > 0) out += "+";
      out += members_[i]->id();
    }
    return out;
  }

 private:
  std::vector<std::unique_ptr<Classifier>> members_;
  ScoreNormalization normalization_;
};

ClassifierSpec parse_single(std::string_view text) {
  ClassifierSpec spec;
  if (text == "nn:mad" || text == "nn") {
    spec.kind = ClassifierSpec::Kind::kNearestNeighbor;
    spec.metric = Metric::kMad;
  } else if (text == "nn:mse") {
    spec.kind = ClassifierSpec::Kind::kNearestNeighbor;
    spec.metric = Metric::kMse;
  } else if (text == "mlp") {
    spec.kind = ClassifierSpec::Kind::kMlp;
  } else if (text == "pnn") {
    spec.kind = ClassifierSpec::Kind::kPnn;
  } else if (text == "rbf") {
    spec.kind = ClassifierSpec::Kind::kRbf;
  } else {
    throw ArgumentError(fmt::format("unknown classifier '{}'", text));
  }
  return spec;
}

}  // namespace

ClassifierSpec ClassifierSpec::parse(std::string_view text) {
  constexpr std::string_view kFusion = "fusion:";
  if (text.substr(0, kFusion.size()) != kFusion) return parse_single(text);
  ClassifierSpec spec;
  spec.kind = Kind::kFusion;
  std::string_view rest = text.substr(kFusion.size());
  while (!rest.empty()) {
    const auto plus = rest.find('+');
    spec.members.push_back(parse_single(rest.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
    if (rest.empty()) throw ArgumentError("trailing '+' in fusion spec");
  }
  if (spec.members.empty()) throw ArgumentError("fusion spec lists no classifiers");
  return spec;
}

std::string ClassifierSpec::to_string() const {
  switch (kind) {
    case Kind::kNearestNeighbor: return fmt::format("nn:{}", faceid::to_string(metric));
    case Kind::kMlp: return "mlp";
    case Kind::kPnn: return "pnn";
    case Kind::kRbf: return "rbf";
    case Kind::kFusion: {
      std::string out = "fusion:";
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (i > 0) out += "+";
        out += members[i].to_string();
      }
      return out;
    }
  }
  return "?";
}

std::unique_ptr<Classifier> make_classifier(const ClassifierSpec& spec,
                                            const Gallery& gallery,
                                            const ClassifierOptions& options,
                                            MlpTrainingLog* mlp_log) {
  switch (spec.kind) {
    case ClassifierSpec::Kind::kNearestNeighbor:
      return std::make_unique<NearestNeighbor>(gallery, spec.metric);
    case ClassifierSpec::Kind::kMlp:
      return std::make_unique<Mlp>(mlp_train(gallery, options.mlp, mlp_log));
    case ClassifierSpec::Kind::kPnn:
      return std::make_unique<Pnn>(
          pnn_build(gallery, options.pnn_spread, options.radial_normalization));
    case ClassifierSpec::Kind::kRbf:
      return std::make_unique<Rbf>(rbf_train(gallery, options.rbf_spread,
                                             options.rbf_max_centers,
                                             options.radial_normalization));
    case ClassifierSpec::Kind::kFusion: {
      std::vector<std::unique_ptr<Classifier>> members;
      for (const auto& m : spec.members) {
        members.push_back(make_classifier(m, gallery, options, mlp_log));
      }
      return std::make_unique<MeanFusion>(std::move(members),
                                          options.fusion_normalization);
    }
  }
  throw ArgumentError("unknown classifier kind");
}

}  // namespace faceid
