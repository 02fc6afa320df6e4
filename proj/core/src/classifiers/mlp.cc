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

#include "faceid/classifiers/mlp.h"

#include <cmath>

#include <fmt/format.h>

#include "faceid/error.h"
#include "faceid/rng.h"

namespace faceid {
namespace {

struct ForwardPass {
  Eigen::MatrixXd hidden;  // N x H
  Eigen::MatrixXd output;  // N x S
};

ForwardPass forward_batch(const MlpModel& m, const Eigen::MatrixXd& inputs) {
  ForwardPass f;
  f.hidden = ((inputs * m.w1.transpose()).rowwise() + m.b1.transpose())
                 .array()
                 .tanh()
                 .matrix();
  f.output = ((f.hidden * m.w2.transpose()).rowwise() + m.b2.transpose())
                 .array()
                 .tanh()
                 .matrix();
  return f;
}

void check_batch(const MlpModel& m, const MlpBatch& batch) {
  if (batch.inputs.cols() != m.input_dim()) {
    throw ArgumentError(fmt::format("batch has dim {}, network expects {}",
                                    batch.inputs.cols(), m.input_dim()));
  }
  if (batch.targets.cols() != m.w2.rows() ||
      batch.targets.rows() != batch.inputs.rows() || batch.inputs.rows() == 0) {
    throw ArgumentError("batch targets do not match the network outputs");
  }
}

double loss_from(const MlpModel& m, const MlpBatch& batch, const ForwardPass& f,
                 double gamma) {
  const double mse = (batch.targets - f.output).squaredNorm() /
                     static_cast<double>(batch.targets.size());
  const Eigen::VectorXd theta = m.parameters();
  const double msw = theta.squaredNorm() / static_cast<double>(theta.size());
  return gamma * mse + (1.0 - gamma) * msw;
}

// Loss and gradient from one forward pass.
double loss_and_gradient(const MlpModel& m, const MlpBatch& batch, double gamma,
                         Eigen::VectorXd* grad) {
  const ForwardPass f = forward_batch(m, batch.inputs);
  const double loss = loss_from(m, batch, f, gamma);
  if (grad == nullptr) return loss;

  const double out_scale = 2.0 * gamma / static_cast<double>(batch.targets.size());
  const Eigen::MatrixXd d_out =
      (out_scale * (f.output - batch.targets)).cwiseProduct(
          (1.0 - f.output.array().square()).matrix());
  const Eigen::MatrixXd d_hidden =
      (d_out * m.w2).cwiseProduct((1.0 - f.hidden.array().square()).matrix());

  MlpModel g;
  g.w1 = d_hidden.transpose() * batch.inputs;
  g.b1 = d_hidden.colwise().sum().transpose();
  g.w2 = d_out.transpose() * f.hidden;
  g.b2 = d_out.colwise().sum().transpose();
  const Eigen::VectorXd theta = m.parameters();
  *grad = g.parameters() +
          (2.0 * (1.0 - gamma) / static_cast<double>(theta.size())) * theta;
  return loss;
}

}  // namespace

Eigen::Index MlpModel::parameter_count() const {
  return w1.size() + b1.size() + w2.size() + b2.size();
}

Eigen::VectorXd MlpModel::parameters() const {
  Eigen::VectorXd flat(parameter_count());
  Eigen::Index at = 0;
  flat.segment(at, w1.size()) = Eigen::Map<const Eigen::VectorXd>(w1.data(), w1.size());
  at += w1.size();
  flat.segment(at, b1.size()) = b1;
  at += b1.size();
  flat.segment(at, w2.size()) = Eigen::Map<const Eigen::VectorXd>(w2.data(), w2.size());
  at += w2.size();
  flat.segment(at, b2.size()) = b2;
  return flat;
}

void MlpModel::set_parameters(const Eigen::VectorXd& flat) {
  if (flat.size() != parameter_count()) {
    throw ArgumentError(fmt::format("expected {} parameters, got {}",
                                    parameter_count(), flat.size()));
  }
  Eigen::Index at = 0;
  Eigen::Map<Eigen::VectorXd>(w1.data(), w1.size()) = flat.segment(at, w1.size());
  at += w1.size();
  b1 = flat.segment(at, b1.size());
  at += b1.size();
  Eigen::Map<Eigen::VectorXd>(w2.data(), w2.size()) = flat.segment(at, w2.size());
  at += w2.size();
  b2 = flat.segment(at, b2.size());
}

Eigen::VectorXd MlpModel::forward(const Eigen::VectorXd& scaled) const {
  if (scaled.size() != input_dim()) {
    throw ArgumentError(fmt::format("input has dim {}, network expects {}",
                                    scaled.size(), input_dim()));
  }
  const Eigen::VectorXd hidden = (w1 * scaled + b1).array().tanh().matrix();
  return (w2 * hidden + b2).array().tanh().matrix();
}

MlpBatch make_batch(const Gallery& gallery, const FeatureScaler& scaler) {
  return MlpBatch{gallery.normalized(scaler), one_vs_all_targets(gallery)};
}

MlpModel mlp_init(const Gallery& gallery, const MlpConfig& config) {
  if (config.hidden < 1) throw ArgumentError("hidden layer needs >= 1 neuron");
  if (config.epochs < 0) throw ArgumentError("epochs must be >= 0");
  if (config.gamma < 0.0 || config.gamma > 1.0) {
    throw ArgumentError("gamma must lie in [0, 1]");
  }
  MlpModel m;
  m.config = config;
  m.subjects = gallery.subjects();
  m.scaler = gallery.scaler(config.normalization);

  const auto dim = gallery.dim();
  const auto hidden = static_cast<Eigen::Index>(config.hidden);
  const auto outputs = static_cast<Eigen::Index>(m.subjects.size());
  Rng rng(config.seed);
  auto fill = [&rng](Eigen::Index rows, Eigen::Index cols, double fan_in) {
    Eigen::MatrixXd w(rows, cols);
    const double bound = 0.5 / std::sqrt(fan_in);
    for (Eigen::Index j = 0; j < cols; ++j) {
      for (Eigen::Index i = 0; i < rows; ++i) w(i, j) = rng.uniform(-bound, bound);
    }
    return w;
  };
  m.w1 = fill(hidden, dim, static_cast<double>(dim));
  m.b1 = fill(hidden, 1, static_cast<double>(dim));
  m.w2 = fill(outputs, hidden, static_cast<double>(hidden));
  m.b2 = fill(outputs, 1, static_cast<double>(hidden));
  return m;
}

double mlp_loss(const MlpModel& model, const MlpBatch& batch, double gamma) {
  check_batch(model, batch);
  return loss_and_gradient(model, batch, gamma, nullptr);
}

Eigen::VectorXd mlp_gradient(const MlpModel& model, const MlpBatch& batch,
                             double gamma) {
  check_batch(model, batch);
  Eigen::VectorXd grad;
  loss_and_gradient(model, batch, gamma, &grad);
  return grad;
}

MlpModel mlp_train(MlpModel model, const MlpBatch& batch, MlpTrainingLog* log) {
  check_batch(model, batch);
  const MlpConfig& cfg = model.config;
  const double gamma = cfg.gamma;
  MlpModel probe = model;  // scratch copy for trial points

  auto evaluate = [&](const Eigen::VectorXd& w, Eigen::VectorXd* grad) {
    probe.set_parameters(w);
    return loss_and_gradient(probe, batch, gamma, grad);
  };

  Eigen::VectorXd w = model.parameters();
  const auto n_params = w.size();
  Eigen::VectorXd g;
  double loss = evaluate(w, &g);
  if (!std::isfinite(loss)) throw DivergenceError(0);

  Eigen::VectorXd r = -g;
  Eigen::VectorXd p = r;
  double lambda = cfg.lambda_init;
  double lambda_bar = 0.0;
  double delta = 0.0;
  bool success = true;
  MlpTrainingLog local;
  MlpTrainingLog& out = log != nullptr ? *log : local;
  out = MlpTrainingLog{};
  out.loss.reserve(static_cast<std::size_t>(cfg.epochs));

  if (r.norm() < cfg.grad_tol) out.converged = true;
  for (int epoch = 1; epoch <= cfg.epochs && !out.converged; ++epoch) {
    double mu = p.dot(r);
    if (mu <= 0.0) {
      // Lost conjugacy; restart along steepest descent.
      p = r;
      mu = p.dot(r);
      success = true;
    }
    const double p2 = p.squaredNorm();
    if (success) {
      const double sigma_k = cfg.sigma / std::sqrt(p2);
      Eigen::VectorXd g_shift;
      evaluate(w + sigma_k * p, &g_shift);
      delta = p.dot(g_shift - g) / sigma_k;
    }
    delta += (lambda - lambda_bar) * p2;
    if (delta <= 0.0) {
      lambda_bar = 2.0 * (lambda - delta / p2);
      delta = -delta + lambda * p2;
      lambda = lambda_bar;
    }
    const double alpha = mu / delta;
    const Eigen::VectorXd w_new = w + alpha * p;
    Eigen::VectorXd g_new;
    const double loss_new = evaluate(w_new, &g_new);
    const double comparison =
        std::isfinite(loss_new) ? 2.0 * delta * (loss - loss_new) / (mu * mu) : -1.0;

    if (comparison >= 0.0) {
      w = w_new;
      loss = loss_new;
      const Eigen::VectorXd r_new = -g_new;
      lambda_bar = 0.0;
      success = true;
      if (epoch % n_params == 0) {
        p = r_new;
      } else {
        const double beta = (r_new.squaredNorm() - r_new.dot(r)) / mu;
        p = r_new + beta * p;
      }
      r = r_new;
      g = g_new;
      if (comparison >= 0.75) lambda = std::max(0.25 * lambda, 1e-15);
    } else {
      lambda_bar = lambda;
      success = false;
    }
    if (comparison < 0.25) {
      lambda = std::min(lambda + delta * (1.0 - comparison) / p2, 1e100);
    }

    if (!std::isfinite(loss) || !w.allFinite()) throw DivergenceError(epoch);
    out.loss.push_back(loss);
    out.epochs_run = epoch;
    if (r.norm() < cfg.grad_tol) out.converged = true;
  }
  model.set_parameters(w);
  return model;
}

MlpModel mlp_train(const Gallery& gallery, const MlpConfig& config,
                   MlpTrainingLog* log) {
  MlpModel model = mlp_init(gallery, config);
  const MlpBatch batch = make_batch(gallery, model.scaler);
  return mlp_train(std::move(model), batch, log);
}

ScoreSet mlp_scores(const MlpModel& model, const FeatureVector& probe) {
  const Eigen::VectorXd out = model.forward(model.scaler.apply(probe.coeffs));
  ScoreSet s;
  s.subjects = model.subjects;
  s.scores.assign(out.data(), out.data() + out.size());
  s.polarity = Polarity::kHigherIsBetter;
  s.classifier_id = "mlp";
  return s;
}

Classification mlp_classify(const MlpModel& model, const FeatureVector& probe) {
  Classification c;
  c.scores = mlp_scores(model, probe);
  c.subject = c.scores.best_subject();
  return c;
}

}  // namespace faceid
