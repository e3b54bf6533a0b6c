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

#ifndef QGAME_COMMANDS_H_
#define QGAME_COMMANDS_H_

// Subcommands of the qgame tool. Each returns a run report: command name,
// engine version, digest of the inputs and the results payload.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "qgame/io.h"
#include "qgame/optimizer.h"

namespace qgame {

inline constexpr const char* kEngineVersion = "qgame 0.1.0";
inline constexpr const char* kBuiltinTable1 = "builtin:table1";

enum ExitCode : int {
  kExitSuccess = 0,
  kExitValidation = 2,
  kExitNonConvergence = 3,
  kExitIo = 4,
};

struct CommandOptions {
  std::string game = kBuiltinTable1;
  std::optional<std::string> setting;
  int samples = 1000;
  std::uint64_t seed = 0;
  OptimizationConfig optimizer;
  SearchMode mode = SearchMode::kPlanar;
  bool timing = false;  // adds wall_time_s; off keeps reports byte-stable
};

struct CommandResult {
  int exit_code = kExitSuccess;
  nlohmann::json report;
};

// Resolves --game: "builtin:table1" or a path to a game file.
GameDefinition ResolveGame(const std::string& source);

CommandResult RunEquilibria(const CommandOptions& options);
CommandResult RunAudit(const CommandOptions& options);
CommandResult RunBell(const CommandOptions& options);
CommandResult RunOptimize(const CommandOptions& options);
CommandResult RunCheck(const CommandOptions& options);

// Dispatches by name ("equilibria", "audit-bound", "bell", "optimize",
// "check") and converts exceptions into an error report with the
// documented exit code (2 validation, 4 I/O).
CommandResult Execute(const std::string& command,
                      const CommandOptions& options);

// SHA-256 hex digest.
std::string Sha256Hex(const std::string& data);

}  // namespace qgame

#endif  // QGAME_COMMANDS_H_
