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

#ifndef QGAME_NELDER_MEAD_H_
#define QGAME_NELDER_MEAD_H_

#include <functional>
#include <span>
#include <vector>

namespace qgame {

struct NelderMeadOptions {
  // Converged once the spread of simplex values is below value_tolerance
  // and every vertex is within point_tolerance of the best one.
  double value_tolerance = 1e-12;
  double point_tolerance = 1e-9;
  int max_iterations = 5000;
};

struct NelderMeadResult {
  std::vector<double> point;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Minimizes `objective` starting from an axis-aligned simplex around
// `start` with edge length `step`. Standard coefficients (reflection 1,
// expansion 2, contraction 1/2, shrink 1/2).
NelderMeadResult NelderMeadMinimize(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> start, double step,
    const NelderMeadOptions& options);

}  // namespace qgame

#endif  // QGAME_NELDER_MEAD_H_
