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

#ifndef QGAME_TABLE1_H_
#define QGAME_TABLE1_H_

#include "qgame/game.h"

namespace qgame {

// The symmetric conflicting-interest game bundled with the library. Its
// deterministic equilibria are three permutations each of
// (5/8, 13/16, 13/16) and (11/8, 7/16, 7/16) plus three fair profiles at
// (3/4, 3/4, 3/4); every one of them has total payoff 9/4, the largest
// total any local hidden-variable advisor can reach.
const UtilityTable& Table1Game();

}  // namespace qgame

#endif  // QGAME_TABLE1_H_
