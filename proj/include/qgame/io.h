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

#ifndef QGAME_IO_H_
#define QGAME_IO_H_

// JSON game definitions and measurement settings.
//
// Game file:
//   {
//     "players": ["A", "B", "C"],
//     "prior": {"000": "1/8", ..., "111": "1/8"},
//     "utilities": {
//       "A": {"<x_A x_B x_C>": {"<y_A y_B y_C>": "num/den", ...}, ...},
//       "B": {...}, "C": {...}
//     }
//   }
// Profile keys are three-character bit strings with player A first.
// Rationals are strings ("-19/6", "2") or JSON integers.
//
// Setting file: angles in radians under keys theta_A0, phi_A0, theta_A1,
// phi_A1, ..., phi_C1. Missing theta_* keys default to pi/2 (equatorial).

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qgame/game.h"
#include "qgame/quantum.h"

namespace qgame {

// Malformed document; the message names the offending field.
class FormatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// The file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GameDefinition {
  UtilityTable utilities;
  Prior prior = Prior::Uniform();
};

nlohmann::json GameToJson(const UtilityTable& utilities, const Prior& prior);
GameDefinition GameFromJson(const nlohmann::json& doc);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

// Throws IoError if the file cannot be read and FormatError (with line and
// column for syntax errors) if it does not describe a valid game.
GameDefinition LoadGameFile(const std::string& path);

nlohmann::json SettingToJson(const MeasurementSetting& setting);
MeasurementSetting SettingFromJson(const nlohmann::json& doc);
MeasurementSetting LoadSettingFile(const std::string& path);

// Rounds to `digits` significant decimal digits.
double RoundSignificant(double value, int digits = 12);

}  // namespace qgame

#endif  // QGAME_IO_H_
