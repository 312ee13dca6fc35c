/*
 * Copyright 2026 The Albertine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// albertine: Albert polynomials and dynamical degrees of abelian variety
// models from the command line.

#include <iostream>

#include <CLI11.hpp>

#include "albertine/cli.hpp"
#include "albertine/model_io.hpp"

int main(int argc, char** argv) {
  using albertine::RunConfig;

  CLI::App app{"Albert polynomials and dynamical degrees of abelian variety models"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string input;
  std::string traces;
  std::vector<std::string> random_args;

  auto* validate = app.add_subcommand("validate", "check a model against the Albert type restrictions");
  validate->add_option("file", input, "model file")->required();

  auto* albert = app.add_subcommand("albert", "characteristic and Albert polynomials of the endomorphism");
  albert->add_option("file", input, "model file")->required();

  auto* degrees = app.add_subcommand("degrees", "cohomological and numerical dynamical degrees");
  degrees->add_option("file", input, "model file")->required();
  degrees->add_option("--m-max", cfg.m_max, "largest power used by the limit estimates (0 skips them)")
      ->capture_default_str();
  degrees->add_option("--traces", traces, "directory for CSV convergence traces");

  auto* verify = app.add_subcommand("verify", "run every identity check on a model file or on random models");
  auto* file_opt = verify->add_option("file", input, "model file");
  auto* random_opt = verify->add_option("--random", random_args, "seed and count")->expected(2);
  file_opt->excludes(random_opt);
  random_opt->excludes(file_opt);

  auto* sv = app.add_subcommand("sv-limit", "singular value limits sigma_i(A^m)^(1/m)");
  sv->add_option("--matrix", input, "JSON matrix file")->required();
  sv->add_option("--m-max", cfg.m_max, "largest power")->required();
  sv->add_option("--traces", traces, "directory for CSV convergence traces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? albertine::kPass : albertine::kInputError;
  }

  try {
    cfg.tol = albertine::tolerances_from_env();
  } catch (const albertine::Error& e) {
    std::cerr << "input error: ALBERTINE_TOL: " << e.what() << "\n";
    return albertine::kInputError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.input = input;
  if (!traces.empty()) cfg.traces = traces;
  if (cfg.command == "verify") {
    if (random_args.empty() == input.empty()) {
      std::cerr << "verify needs either a model file or --random <seed> <count>\n";
      return albertine::kInputError;
    }
    if (!random_args.empty()) {
      try {
        cfg.random = true;
        cfg.seed = std::stoull(random_args[0]);
        cfg.count = static_cast<unsigned>(std::stoul(random_args[1]));
      } catch (const std::exception&) {
        std::cerr << "--random expects two non-negative integers\n";
        return albertine::kInputError;
      }
    }
  }
  return albertine::run(cfg, std::cout, std::cerr);
}
