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

#include "qgame/table1.h"

#include <array>
#include <string_view>

namespace qgame {
namespace {

// Layout of the reference table: blocks indexed [x_C][x_B][column], where
// the four columns are (y_C, y_B) = 00, 01, 10, 11, and each block is a
// 2x2 matrix with rows x_A and columns y_A.
using Block = std::array<std::array<std::string_view, 2>, 2>;
using PlayerTable = std::array<std::array<std::array<Block, 4>, 2>, 2>;

// clang-format off
constexpr PlayerTable kUtilityA = {{
  {{  // x_C = 0
    {{ {{{"2", "0"}, {"2", "1"}}},
       {{{"3/2", "1"}, {"0", "2"}}},
       {{{"3/2", "1"}, {"0", "2"}}},
       {{{"4", "1"}, {"4", "19/3"}}} }},          // x_B = 0
    {{ {{{"0", "-1"}, {"-1", "1"}}},
       {{{"-1/2", "2"}, {"1", "0"}}},
       {{{"1", "-1"}, {"1/2", "0"}}},
       {{{"-2", "-19/6"}, {"-1", "-1/2"}}} }},    // x_B = 1
  }},
  {{  // x_C = 1
    {{ {{{"0", "-1"}, {"-1", "1"}}},
       {{{"1", "-1"}, {"1/2", "0"}}},
       {{{"-1/2", "2"}, {"1", "0"}}},
       {{{"-2", "-19/6"}, {"-1", "-1/2"}}} }},
    {{ {{{"2", "2"}, {"0", "-2"}}},
       {{{"1", "1"}, {"2", "1/2"}}},
       {{{"1", "1"}, {"2", "1/2"}}},
       {{{"0", "4"}, {"-1", "2/3"}}} }},
  }},
}};

constexpr PlayerTable kUtilityB = {{
  {{
    {{ {{{"2", "3/2"}, {"0", "-1/2"}}},
       {{{"0", "1"}, {"-1", "2"}}},
       {{{"3/2", "4"}, {"1", "-2"}}},
       {{{"1", "1"}, {"-1", "-19/6"}}} }},
    {{ {{{"2", "0"}, {"-1", "1"}}},
       {{{"1", "2"}, {"1", "0"}}},
       {{{"0", "4"}, {"1/2", "-1"}}},
       {{{"2", "19/3"}, {"0", "-1/2"}}} }},
  }},
  {{
    {{ {{{"0", "1"}, {"2", "1"}}},
       {{{"-1", "-1"}, {"2", "1"}}},
       {{{"-1/2", "-2"}, {"1", "0"}}},
       {{{"2", "-19/6"}, {"1", "4"}}} }},
    {{ {{{"-1", "1/2"}, {"0", "2"}}},
       {{{"1", "0"}, {"-2", "1/2"}}},
       {{{"1", "-1"}, {"2", "-1"}}},
       {{{"0", "-1/2"}, {"1/2", "2/3"}}} }},
  }},
}};

constexpr PlayerTable kUtilityC = {{
  {{
    {{ {{{"2", "3/2"}, {"0", "-1/2"}}},
       {{{"3/2", "4"}, {"1", "-2"}}},
       {{{"0", "1"}, {"-1", "2"}}},
       {{{"1", "1"}, {"-1", "-19/6"}}} }},
    {{ {{{"0", "1"}, {"2", "1"}}},
       {{{"-1/2", "-2"}, {"1", "0"}}},
       {{{"-1", "-1"}, {"2", "1"}}},
       {{{"2", "-19/6"}, {"1", "4"}}} }},
  }},
  {{
    {{ {{{"2", "0"}, {"-1", "1"}}},
       {{{"0", "4"}, {"1/2", "-1"}}},
       {{{"1", "2"}, {"1", "0"}}},
       {{{"2", "19/3"}, {"0", "-1/2"}}} }},
    {{ {{{"-1", "1/2"}, {"0", "2"}}},
       {{{"1", "-1"}, {"2", "-1"}}},
       {{{"1", "0"}, {"-2", "1/2"}}},
       {{{"0", "-1/2"}, {"1/2", "2/3"}}} }},
  }},
}};
// clang-format on

constexpr std::array<const PlayerTable*, kNumPlayers> kTables = {
    &kUtilityA, &kUtilityB, &kUtilityC};

}  // namespace

const UtilityTable& Table1Game() {
  static const UtilityTable game(
      [](Player p, TypeProfile x, ActionProfile y) {
        const PlayerTable& t = *kTables[PlayerIndex(p)];
        const int column = 2 * y[Player::kC] + y[Player::kB];
        const Block& block = t[x[Player::kC]][x[Player::kB]][column];
        return ParseRational(block[x[Player::kA]][y[Player::kA]]);
      });
  return game;
}

}  // namespace qgame
