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

#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.h"
#include "faceid/error.h"
#include "run_config.h"

namespace {

using faceid::cli::RunConfig;

void add_shared_options(CLI::App& app, RunConfig& c) {
  app.add_option("--orl", c.orl, "ORL-style tree root (s<subject>/<sample>.pgm)")
      ->group("Dataset");
  app.add_option("--manifest", c.manifest, "text manifest: subject sample path")
      ->group("Dataset");
  app.add_option("--synth", c.synth, "synthetic corpus seed,subjects,samples,rows,cols")
      ->join(',')
      ->group("Dataset");
  app.add_option("--split-k", c.split_k, "enrolled images per subject")
      ->capture_default_str()->group("Dataset");

  app.add_option("--transform", c.transform, "dct, dft, logdft or klt")
      ->capture_default_str()->group("Features");
  app.add_option("--mask", c.mask, "zonal mask, e.g. rect:10 or sector:12.5,low:1")
      ->join(',')
      ->capture_default_str()->group("Features");
  app.add_option("--dim", c.dim, "eigenface count for klt")
      ->capture_default_str()->check(CLI::PositiveNumber)->group("Features");
  app.add_option("--reduction", c.reduction, "complex coefficients: modulus or realimag")
      ->capture_default_str()->group("Features");
  app.add_option("--log-offset", c.log_offset, "offset inside the log for logdft")
      ->capture_default_str()->group("Features");

  app.add_option("--classifier", c.classifier,
                 "nn:mad, nn:mse, mlp, pnn, rbf or fusion:<a>+<b>")
      ->capture_default_str()->group("Classifier");
  app.add_option("--seed", c.seed, "RNG seed")->capture_default_str()->group("Classifier");
  app.add_option("--epochs", c.epochs, "MLP training epochs")
      ->capture_default_str()->check(CLI::PositiveNumber)->group("Classifier");
  app.add_option("--gamma", c.gamma, "MLP performance ratio")
      ->capture_default_str()->check(CLI::Range(0.0, 1.0))->group("Classifier");
  app.add_option("--hidden", c.hidden, "MLP hidden layer width")
      ->capture_default_str()->check(CLI::PositiveNumber)->group("Classifier");
  app.add_option("--pnn-spread", c.pnn_spread, "PNN spread")
      ->capture_default_str()->check(CLI::PositiveNumber)->group("Classifier");
  app.add_option("--rbf-spread", c.rbf_spread, "RBF spread")
      ->capture_default_str()->check(CLI::PositiveNumber)->group("Classifier");
  app.add_option("--max-centers", c.max_centers, "RBF center budget")
      ->capture_default_str()->check(CLI::PositiveNumber)->group("Classifier");
  app.add_option("--normalization", c.normalization,
                 "PNN/RBF input scaling: none, zscore or zscore-rms")
      ->capture_default_str()->group("Classifier");
  app.add_option("--mlp-normalization", c.mlp_normalization, "MLP input scaling")
      ->capture_default_str()->group("Classifier");
  app.add_option("--fusion-normalization", c.fusion_normalization, "minmax or zscore")
      ->capture_default_str()->group("Classifier");

  app.add_option("--threads", c.threads, "worker threads (0 = hardware)")
      ->capture_default_str()->group("Run");
  app.add_option("--out", c.out, "output directory")->capture_default_str()->group("Run");
}

}  // namespace

// Comma-bearing values use join(',') so config files, whose parser splits
// on commas, hand them back intact.
int main(int argc, char** argv) {
  CLI::App app{"Face identification experiments on grayscale image corpora", "faceid"};
  app.set_config("--config", "", "key = value configuration file; flags override it");
  app.require_subcommand(1);

  RunConfig config;
  add_shared_options(app, config);

  auto* extract = app.add_subcommand("extract", "write gallery and probe feature vectors");
  auto* evaluate = app.add_subcommand("evaluate", "train a classifier and score the probes");
  auto* sweep = app.add_subcommand("sweep", "identification rate over a parameter grid");
  auto* table1 = app.add_subcommand("table1", "reference comparison table");
  auto* reconstruct =
      app.add_subcommand("reconstruct", "DCT truncation and reconstruction of one image");
  auto* rank = app.add_subcommand("rank", "rank features by discriminability");
  for (auto* sub : {extract, evaluate, sweep, table1, reconstruct, rank}) sub->fallthrough();

  faceid::cli::EvaluateOptions eval_opts;
  evaluate->add_flag("--histograms", eval_opts.histograms,
                     "export genuine and impostor histograms");
  evaluate->add_option("--bins", eval_opts.bins, "histogram bins")
      ->capture_default_str()->check(CLI::PositiveNumber);

  faceid::cli::SweepOptions sweep_opts;
  sweep->add_option("--axis", sweep_opts.axis, "dim or spread")->capture_default_str();
  sweep->add_option("--shape", sweep_opts.shape, "rect or sector")->capture_default_str();
  auto* grid = sweep->add_option("--grid", sweep_opts.grid, "comma-separated grid values")
                   ->join(',');
  sweep->add_option("--max-dim", sweep_opts.max_dim, "largest dimension of the default grid")
      ->capture_default_str()->check(CLI::PositiveNumber);

  faceid::cli::Table1Cli table_opts;
  table1->add_option("--rows", table_opts.rows, "all or nn")->capture_default_str();
  table1->add_option("--baseline-manifest", table_opts.baseline_manifest,
                     "manifest whose dataset checksum is compared");

  faceid::cli::ReconstructOptions rec_opts;
  reconstruct->add_option("--subject", rec_opts.subject)->capture_default_str();
  reconstruct->add_option("--sample", rec_opts.sample)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  sweep_opts.grid_given = grid->count() > 0;

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == extract) return faceid::cli::cmd_extract(config);
    if (active == evaluate) return faceid::cli::cmd_evaluate(config, eval_opts);
    if (active == sweep) return faceid::cli::cmd_sweep(config, sweep_opts);
    if (active == table1) return faceid::cli::cmd_table1(config, table_opts);
    if (active == reconstruct) return faceid::cli::cmd_reconstruct(config, rec_opts);
    return faceid::cli::cmd_rank(config);
  } catch (const faceid::ArgumentError& e) {
    fmt::print(stderr, "error: {}\n\n{}", e.what(), active->help());
    return 2;
  } catch (const faceid::DataError& e) {
    fmt::print(stderr, "data error: {}\n", e.what());
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    fmt::print(stderr, "data error: {}\n", e.what());
    return 3;
  } catch (const faceid::NumericError& e) {
    fmt::print(stderr, "numeric error: {}\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
}
