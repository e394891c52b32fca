/*
 * Copyright 2026 The xailab authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "xailab/config.hpp"
#include "xailab/dataset.hpp"
#include "xailab/error.hpp"
#include "xailab/harness.hpp"
#include "xailab/synthetic.hpp"
#include "xailab/version.hpp"

namespace {

int cmd_gen_data(std::size_t rows, std::size_t noise, double bias,
                 std::size_t uncorrelated, std::uint64_t seed,
                 const std::string& out_dir) {
  if (rows == 0) throw xailab::ConfigError("--rows: must be >= 1");
  if (!(bias > 0.5 && bias <= 1.0))
    throw xailab::ConfigError("--bias: must lie in (0.5, 1]");
  if (uncorrelated == 0)
    throw xailab::ConfigError("--uncorrelated: must be >= 1");
  xailab::SyntheticConfig config;
  config.n_rows = rows;
  config.n_noise_features = noise;
  config.bias_strength = bias;
  config.n_uncorrelated = uncorrelated;
  config.seed = seed;
  const xailab::Dataset data = xailab::generate_synthetic(config);
  std::filesystem::create_directories(out_dir);
  const auto base = std::filesystem::path(out_dir);
  const std::string data_path = (base / "data.csv").string();
  const std::string schema_path = (base / "schema.json").string();
  xailab::write_csv(data_path, data);
  xailab::save_schema(schema_path, data.schema);
  std::cout << "wrote " << data_path << "\n";
  std::cout << "wrote " << schema_path << "\n";
  return 0;
}

int cmd_run(const std::string& config_path, const std::string& out_override,
            std::size_t parallel) {
  xailab::ExperimentConfig config =
      xailab::load_experiment_config(config_path);
  if (!out_override.empty()) config.out_dir = out_override;
  const std::vector<std::string> files =
      xailab::run_experiment(config, parallel == 0 ? 1 : parallel);
  for (const auto& name : files)
    std::cout << "wrote "
              << (std::filesystem::path(config.out_dir) / name).string()
              << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bias-concealment laboratory for feature-attribution explainers"};
  app.require_subcommand(1);

  std::size_t rows = 0;
  std::size_t noise = 8;
  double bias = 0.9;
  std::size_t uncorrelated = 2;
  std::uint64_t seed = 0;
  std::string gen_out = ".";
  CLI::App* gen = app.add_subcommand(
      "gen-data", "generate a synthetic dataset (data.csv + schema.json)");
  gen->add_option("--rows", rows, "number of rows")->required();
  gen->add_option("--noise", noise, "number of continuous noise features");
  gen->add_option("--bias", bias, "P(label == sensitive), in (0.5, 1]");
  gen->add_option("--uncorrelated", uncorrelated,
                  "number of uncorrelated binary features");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", gen_out, "output directory");

  std::string config_path;
  std::string run_out;
  std::size_t parallel = 1;
  CLI::App* run = app.add_subcommand(
      "run", "run the experiment described by a config or manifest file");
  run->add_option("config", config_path, "config JSON (or emitted manifest)")
      ->required();
  run->add_option("--out", run_out, "output directory (overrides the config)");
  run->add_option("--parallel", parallel, "max concurrent sweep cells");

  CLI::App* version =
      app.add_subcommand("version", "print the artifact version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed())
      return cmd_gen_data(rows, noise, bias, uncorrelated, seed, gen_out);
    if (run->parsed()) return cmd_run(config_path, run_out, parallel);
    if (version->parsed()) {
      std::cout << xailab::kVersion << "\n";
      return 0;
    }
  } catch (const xailab::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const xailab::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
