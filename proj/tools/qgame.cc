// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qgame: classical equilibria, Bell audits and GHZ-advisor optimization for
// the three-player Bayesian game.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qgame/commands.h"
#include "qgame/io.h"

int main(int argc, char** argv) {
  qgame::CommandOptions options;
  std::string out;
  std::string mode = "planar";

  CLI::App app{"Three-player Bayesian game with classical and quantum advisors"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--game", options.game,
                    "Game file or builtin:table1")
        ->capture_default_str();
    sub->add_option("--out", out, "Write the JSON report here (default stdout)");
    sub->add_flag("--timing", options.timing, "Include wall time in the report");
  };
  auto add_optimizer = [&](CLI::App* sub) {
    sub->add_option("--restarts", options.optimizer.restarts)
        ->capture_default_str();
    sub->add_option("--grid", options.optimizer.grid,
                    "Coarse grid points per angle")
        ->capture_default_str();
    sub->add_option("--tol", options.optimizer.tolerance,
                    "Simplex convergence tolerance")
        ->capture_default_str();
    sub->add_option("--max-iterations", options.optimizer.max_iterations)
        ->capture_default_str();
    sub->add_option("--seed", options.optimizer.seed)->capture_default_str();
  };

  CLI::App* equilibria =
      app.add_subcommand("equilibria", "Enumerate deterministic equilibria");
  add_common(equilibria);

  CLI::App* audit = app.add_subcommand(
      "audit-bound", "Check the classical total-payoff and Bell bounds");
  add_common(audit);
  audit->add_option("--samples", options.samples,
                    "Random hidden-variable mixtures")
      ->capture_default_str();
  audit->add_option("--seed", options.seed)->capture_default_str();

  CLI::App* bell = app.add_subcommand(
      "bell", "Bell expressions of local strategies and of a GHZ setting");
  add_common(bell);
  bell->add_option("--setting", options.setting, "Measurement setting file");

  CLI::App* optimize = app.add_subcommand(
      "optimize", "Maximize the fair GHZ payoff over equatorial angles");
  add_common(optimize);
  add_optimizer(optimize);

  CLI::App* check = app.add_subcommand(
      "check", "Evaluate a measurement setting and test it for equilibrium");
  add_common(check);
  add_optimizer(check);
  check->add_option("--setting", options.setting, "Measurement setting file")
      ->required();
  check->add_option("--mode", mode, "Best-response search: planar or full")
      ->check(CLI::IsMember({"planar", "full", "full_sphere"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qgame::kExitValidation;
  }
  options.mode = qgame::ParseSearchMode(mode);

  const std::string command = app.get_subcommands().front()->get_name();
  const qgame::CommandResult result = qgame::Execute(command, options);
  const std::string text = result.report.dump(2) + "\n";

  if (result.report.contains("error")) {
    std::cerr << "error: " << result.report["error"]["message"].get<std::string>()
              << "\n";
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    try {
      qgame::WriteFile(out, text);
    } catch (const qgame::IoError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return qgame::kExitIo;
    }
  }
  return result.exit_code;
}
