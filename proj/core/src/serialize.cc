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

#include "faceid/serialize.h"

#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "faceid/eigenfaces.h"
#include "faceid/error.h"

namespace faceid {
namespace {

using nlohmann::json;

constexpr const char* kModelFormat = "faceid.model";
constexpr const char* kBasisFormat = "faceid.eigenbasis";

json matrix_to_json(const Eigen::MatrixXd& m) {
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"data", std::vector<double>(m.data(), m.data() + m.size())}};
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto data = j.at("data").get<std::vector<double>>();
  if (static_cast<Eigen::Index>(data.size()) != rows * cols) {
    throw DataError("matrix payload does not match its shape");
  }
  return Eigen::Map<const Eigen::MatrixXd>(data.data(), rows, cols);
}

json vector_to_json(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

Eigen::VectorXd vector_from_json(const json& j) {
  const auto data = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(data.data(),
                                           static_cast<Eigen::Index>(data.size()));
}

json scaler_to_json(const FeatureScaler& s) {
  return json{{"mode", to_string(s.mode)},
              {"offset", vector_to_json(s.offset)},
              {"scale", vector_to_json(s.scale)}};
}

FeatureScaler scaler_from_json(const json& j) {
  FeatureScaler s;
  s.mode = parse_normalization(j.at("mode").get<std::string>());
  s.offset = vector_from_json(j.at("offset"));
  s.scale = vector_from_json(j.at("scale"));
  return s;
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << doc.dump(1) << '\n';
}

json read_json(const std::filesystem::path& path, const char* format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(fmt::format("{}: {}", path.string(), e.what()));
  }
  if (doc.value("format", "") != format) {
    throw DataError(fmt::format("{} is not a {} file", path.string(), format));
  }
  if (doc.value("version", 0) != kModelFormatVersion) {
    throw DataError(fmt::format("{}: unsupported version {}", path.string(),
                                doc.value("version", 0)));
  }
  return doc;
}

json model_header(const char* kind, const std::vector<int>& subjects,
                  const FeatureScaler& scaler) {
  return json{{"format", kModelFormat},
              {"version", kModelFormatVersion},
              {"kind", kind},
              {"subjects", subjects},
              {"normalization", scaler_to_json(scaler)}};
}

json read_model(const std::filesystem::path& path, const char* kind) {
  json doc = read_json(path, kModelFormat);
  if (doc.value("kind", "") != kind) {
    throw DataError(fmt::format("{} holds a '{}' model, expected '{}'", path.string(),
                                doc.value("kind", ""), kind));
  }
  return doc;
}

template <typename Fn>
auto guarded(const std::filesystem::path& path, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw DataError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace

void save_eigenbasis(const std::filesystem::path& path, const EigenBasis& basis) {
  write_json(path, json{{"format", kBasisFormat},
                        {"version", kModelFormatVersion},
                        {"rows", basis.rows()},
                        {"cols", basis.cols()},
                        {"m_prime", basis.size()},
                        {"eigenvalues", vector_to_json(basis.eigenvalues())},
                        {"mean_face", vector_to_json(basis.mean_face())},
                        {"eigenfaces", matrix_to_json(basis.eigenfaces())}});
}

EigenBasis load_eigenbasis(const std::filesystem::path& path) {
  const json doc = read_json(path, kBasisFormat);
  return guarded(path, [&] {
    return EigenBasis(doc.at("rows").get<Eigen::Index>(),
                      doc.at("cols").get<Eigen::Index>(),
                      vector_from_json(doc.at("mean_face")),
                      matrix_from_json(doc.at("eigenfaces")),
                      vector_from_json(doc.at("eigenvalues")));
  });
}

void save_model(const std::filesystem::path& path, const MlpModel& m) {
  json doc = model_header("mlp", m.subjects, m.scaler);
  const auto& c = m.config;
  doc["config"] = json{{"hidden", c.hidden},       {"epochs", c.epochs},
                       {"gamma", c.gamma},         {"seed", c.seed},
                       {"grad_tol", c.grad_tol},   {"sigma", c.sigma},
                       {"lambda_init", c.lambda_init},
                       {"normalization", to_string(c.normalization)}};
  doc["parameters"] = json{{"w1", matrix_to_json(m.w1)},
                           {"b1", vector_to_json(m.b1)},
                           {"w2", matrix_to_json(m.w2)},
                           {"b2", vector_to_json(m.b2)}};
  write_json(path, doc);
}

void save_model(const std::filesystem::path& path, const PnnModel& m) {
  json doc = model_header("pnn", m.subjects, m.scaler);
  doc["config"] = json{{"spread", m.spread}};
  doc["parameters"] = json{{"centers", matrix_to_json(m.centers)},
                           {"labels", m.labels}};
  write_json(path, doc);
}

void save_model(const std::filesystem::path& path, const RbfModel& m) {
  json doc = model_header("rbf", m.subjects, m.scaler);
  doc["config"] = json{{"spread", m.spread},
                       {"max_centers", m.center_indices.size()}};
  doc["parameters"] = json{{"center_indices", m.center_indices},
                           {"centers", matrix_to_json(m.centers)},
                           {"weights", matrix_to_json(m.weights)},
                           {"bias", vector_to_json(m.bias)},
                           {"residuals", m.residuals}};
  write_json(path, doc);
}

MlpModel load_mlp_model(const std::filesystem::path& path) {
  const json doc = read_model(path, "mlp");
  return guarded(path, [&] {
    MlpModel m;
    const auto& c = doc.at("config");
    m.config.hidden = c.at("hidden").get<int>();
    m.config.epochs = c.at("epochs").get<int>();
    m.config.gamma = c.at("gamma").get<double>();
    m.config.seed = c.at("seed").get<std::uint64_t>();
    m.config.grad_tol = c.at("grad_tol").get<double>();
    m.config.sigma = c.at("sigma").get<double>();
    m.config.lambda_init = c.at("lambda_init").get<double>();
    m.config.normalization = parse_normalization(c.at("normalization").get<std::string>());
    m.subjects = doc.at("subjects").get<std::vector<int>>();
    m.scaler = scaler_from_json(doc.at("normalization"));
    const auto& p = doc.at("parameters");
    m.w1 = matrix_from_json(p.at("w1"));
    m.b1 = vector_from_json(p.at("b1"));
    m.w2 = matrix_from_json(p.at("w2"));
    m.b2 = vector_from_json(p.at("b2"));
    return m;
  });
}

PnnModel load_pnn_model(const std::filesystem::path& path) {
  const json doc = read_model(path, "pnn");
  return guarded(path, [&] {
    PnnModel m;
    m.spread = doc.at("config").at("spread").get<double>();
    m.subjects = doc.at("subjects").get<std::vector<int>>();
    m.scaler = scaler_from_json(doc.at("normalization"));
    const auto& p = doc.at("parameters");
    m.centers = matrix_from_json(p.at("centers"));
    m.labels = p.at("labels").get<std::vector<int>>();
    return m;
  });
}

RbfModel load_rbf_model(const std::filesystem::path& path) {
  const json doc = read_model(path, "rbf");
  return guarded(path, [&] {
    RbfModel m;
    m.spread = doc.at("config").at("spread").get<double>();
    m.subjects = doc.at("subjects").get<std::vector<int>>();
    m.scaler = scaler_from_json(doc.at("normalization"));
    const auto& p = doc.at("parameters");
    m.center_indices = p.at("center_indices").get<std::vector<int>>();
    m.centers = matrix_from_json(p.at("centers"));
    m.weights = matrix_from_json(p.at("weights"));
    m.bias = vector_from_json(p.at("bias"));
    m.residuals = p.at("residuals").get<std::vector<double>>();
    return m;
  });
}

}  // namespace faceid
