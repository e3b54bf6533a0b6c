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

#ifndef QGAME_OPTIMIZER_H_
#define QGAME_OPTIMIZER_H_

// Payoff maximization over GHZ measurement angles and numerical
// best-response certification of the resulting equilibrium.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qgame/game.h"
#include "qgame/quantum.h"

namespace qgame {

// Maximum unilateral gain below which a setting counts as an equilibrium.
inline constexpr double kEquilibriumThreshold = 1e-6;

struct OptimizationConfig {
  int restarts = 8;
  int grid = 12;  // points per angle in the coarse scan
  double tolerance = 1e-12;
  int max_iterations = 5000;
  std::uint64_t seed = 0;

  // Throws ValidationError: restarts >= 1, grid >= 8, tolerance > 0,
  // max_iterations >= 1.
  void Validate() const;
};

struct LocalMaximum {
  PlanarAngles angles;  // canonical gauge
  double value = 0.0;
  bool converged = false;
};

struct OptimumReport {
  PlanarAngles angles;  // canonical gauge, phi1 = phi3 = 0
  double value = 0.0;
  PayoffTriple<double> payoffs;
  std::array<double, 2> bell_values{};  // V011, V100
  bool converged = false;
  // Distinct maxima reached from the starts, best first. Not claimed to be
  // complete.
  std::vector<LocalMaximum> local_maxima;
};

// Maximizes the closed-form planar payoff of the bundled game over
// (phi2, phi4, phi5, phi6) with phi1 = phi3 = 0. Payoffs and Bell values in
// the report come from the trace computation at the optimum.
OptimumReport MaximizePlanar(const OptimizationConfig& config = {});

// Same search for an arbitrary game with the GHZ advisor, maximizing the
// smallest of the three trace-computed payoffs.
OptimumReport MaximizeFairPlanar(const UtilityTable& game, const Prior& prior,
                                 const OptimizationConfig& config = {});

enum class SearchMode { kPlanar, kFullSphere };

std::string SearchModeName(SearchMode mode);
// "planar" or "full"/"full_sphere".
SearchMode ParseSearchMode(std::string_view name);

struct PlayerDeviation {
  Player player = Player::kA;
  double current_payoff = 0.0;
  double best_payoff = 0.0;
  double improvement = 0.0;  // best_payoff - current_payoff
  std::array<BlochObservable, 2> deviation{};
};

struct BestResponseVerdict {
  SearchMode mode = SearchMode::kPlanar;
  std::array<PlayerDeviation, kNumPlayers> players{};
  double max_improvement = 0.0;
  bool certified = false;  // max_improvement < kEquilibriumThreshold
};

// For each player, maximizes their own payoff over their two observables
// with the other players held at `candidate`. Planar mode keeps the
// deviating observables on the equator; full-sphere mode frees theta too.
BestResponseVerdict BestResponseCheck(const UtilityTable& game,
                                      const Prior& prior,
                                      const QuantumAdvisor& advisor,
                                      const MeasurementSetting& candidate,
                                      SearchMode mode,
                                      const OptimizationConfig& config = {});

// Bundled game, uniform prior, GHZ advisor.
BestResponseVerdict BestResponseCheck(const MeasurementSetting& candidate,
                                      SearchMode mode,
                                      const OptimizationConfig& config = {});

struct AdvantageReport {
  Rational classical_bound;     // max total payoff of local advisors
  Rational classical_fair_cap;  // classical_bound / 3
  OptimumReport quantum;
  double quantum_total = 0.0;
  double advantage = 0.0;  // quantum.value - classical_fair_cap
  bool quantum_beats_classical = false;
};

AdvantageReport QuantumAdvantageReport(const UtilityTable& game,
                                       const Prior& prior,
                                       const OptimizationConfig& config = {});

}  // namespace qgame

#endif  // QGAME_OPTIMIZER_H_
