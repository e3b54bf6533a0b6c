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

#include "qgame/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qgame {
namespace {

using nlohmann::json;

const json& Field(const json& object, const std::string& key,
                  const std::string& path) {
  if (!object.is_object()) {
    throw FormatError(path + " must be an object");
  }
  const auto it = object.find(key);
  if (it == object.end()) {
    throw FormatError("missing field " + path + "[\"" + key + "\"]");
  }
  return *it;
}

Rational RationalField(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) {
    throw FormatError(path + " must be a rational string like \"3/2\"");
  }
  try {
    return ParseRational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void ExpectExactKeys(const json& object, const std::string& path) {
  if (!object.is_object() || object.size() != 8) {
    throw FormatError(path + " must be an object with the 8 keys \"000\".."
                             "\"111\"");
  }
  for (const auto& [key, value] : object.items()) {
    try {
      ParseProfile<TypeProfile>(key);
    } catch (const std::invalid_argument&) {
      throw FormatError(path + " has unexpected key \"" + key + "\"");
    }
  }
}

std::string SettingKey(const char* what, Player p, int type) {
  return std::string(what) + "_" + PlayerName(p) + std::to_string(type);
}

}  // namespace

json GameToJson(const UtilityTable& utilities, const Prior& prior) {
  json doc;
  doc["players"] = {"A", "B", "C"};
  json prior_doc = json::object();
  for (TypeProfile x : AllProfiles<TypeProfile>()) {
    prior_doc[x.ToString()] = FormatRational(prior[x]);
  }
  doc["prior"] = prior_doc;
  json table = json::object();
  for (Player p : kPlayers) {
    json per_player = json::object();
    for (TypeProfile x : AllProfiles<TypeProfile>()) {
      json row = json::object();
      for (ActionProfile y : AllProfiles<ActionProfile>()) {
        row[y.ToString()] = FormatRational(utilities(p, x, y));
      }
      per_player[x.ToString()] = row;
    }
    table[std::string(1, PlayerName(p))] = per_player;
  }
  doc["utilities"] = table;
  return doc;
}

GameDefinition GameFromJson(const json& doc) {
  if (!doc.is_object()) throw FormatError("game document must be an object");
  if (Field(doc, "players", "game") != json({"A", "B", "C"})) {
    throw FormatError("game[\"players\"] must be [\"A\", \"B\", \"C\"]");
  }

  const json& prior_doc = Field(doc, "prior", "game");
  ExpectExactKeys(prior_doc, "prior");
  std::array<Rational, 8> weights;
  for (TypeProfile x : AllProfiles<TypeProfile>()) {
    const std::string path = "prior[\"" + x.ToString() + "\"]";
    weights[x.index()] =
        RationalField(Field(prior_doc, x.ToString(), "prior"), path);
  }

  const json& table = Field(doc, "utilities", "game");
  if (!table.is_object() || table.size() != 3) {
    throw FormatError("utilities must have exactly the keys A, B and C");
  }
  std::array<Rational, kNumPlayers * 64> entries;
  for (Player p : kPlayers) {
    const std::string name(1, PlayerName(p));
    const json& per_player = Field(table, name, "utilities");
    const std::string player_path = "utilities[\"" + name + "\"]";
    ExpectExactKeys(per_player, player_path);
    for (TypeProfile x : AllProfiles<TypeProfile>()) {
      const json& row = Field(per_player, x.ToString(), player_path);
      const std::string row_path = player_path + "[\"" + x.ToString() + "\"]";
      ExpectExactKeys(row, row_path);
      for (ActionProfile y : AllProfiles<ActionProfile>()) {
        entries[PlayerIndex(p) * 64 + x.index() * 8 + y.index()] =
            RationalField(Field(row, y.ToString(), row_path),
                          row_path + "[\"" + y.ToString() + "\"]");
      }
    }
  }

  GameDefinition game{UtilityTable([&](Player p, TypeProfile x,
                                       ActionProfile y) {
                        return entries[PlayerIndex(p) * 64 + x.index() * 8 +
                                       y.index()];
                      }),
                      Prior(weights)};
  return game;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream contents;
  contents << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return contents.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << contents;
  if (!out) throw IoError("error writing " + path);
}

namespace {

json ParseDocument(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace

GameDefinition LoadGameFile(const std::string& path) {
  const json doc = ParseDocument(ReadFile(path), path);
  try {
    return GameFromJson(doc);
  } catch (const ValidationError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

json SettingToJson(const MeasurementSetting& setting) {
  json doc = json::object();
  for (Player p : kPlayers) {
    for (int type = 0; type < 2; ++type) {
      doc[SettingKey("theta", p, type)] = setting(p, type).theta;
      doc[SettingKey("phi", p, type)] = setting(p, type).phi;
    }
  }
  return doc;
}

MeasurementSetting SettingFromJson(const json& doc) {
  if (!doc.is_object()) throw FormatError("setting must be a JSON object");
  std::size_t recognized = 0;
  MeasurementSetting setting;
  for (Player p : kPlayers) {
    for (int type = 0; type < 2; ++type) {
      const std::string phi_key = SettingKey("phi", p, type);
      const std::string theta_key = SettingKey("theta", p, type);
      const json& phi = Field(doc, phi_key, "setting");
      if (!phi.is_number()) throw FormatError(phi_key + " must be a number");
      setting(p, type).phi = phi.get<double>();
      ++recognized;
      setting(p, type).theta = std::numbers::pi / 2.0;
      if (const auto it = doc.find(theta_key); it != doc.end()) {
        if (!it->is_number()) {
          throw FormatError(theta_key + " must be a number");
        }
        setting(p, type).theta = it->get<double>();
        ++recognized;
      }
    }
  }
  if (recognized != doc.size()) {
    for (const auto& [key, value] : doc.items()) {
      bool known = false;
      for (Player p : kPlayers) {
        for (int type = 0; type < 2; ++type) {
          known = known || key == SettingKey("phi", p, type) ||
                  key == SettingKey("theta", p, type);
        }
      }
      if (!known) throw FormatError("unknown setting key \"" + key + "\"");
    }
  }
  for (const auto& pair : setting.observables) {
    for (const auto& obs : pair) {
      if (!std::isfinite(obs.theta) || !std::isfinite(obs.phi)) {
        throw FormatError("setting angles must be finite");
      }
    }
  }
  return setting;
}

MeasurementSetting LoadSettingFile(const std::string& path) {
  const json doc = ParseDocument(ReadFile(path), path);
  try {
    return SettingFromJson(doc);
  } catch (const ValidationError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

double RoundSignificant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

}  // namespace qgame
