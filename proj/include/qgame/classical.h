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

#ifndef QGAME_CLASSICAL_H_
#define QGAME_CLASSICAL_H_

// Local hidden-variable advisors: deterministic strategy profiles, finite
// mixtures of local responses, the two tripartite Bell expressions and the
// exhaustive search for deterministic Nash equilibria.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgame/game.h"
#include "qgame/rational.h"

namespace qgame {

// A player's action for each of their own two types.
class DeterministicStrategy {
 public:
  constexpr DeterministicStrategy() = default;
  constexpr DeterministicStrategy(int action_for_type0, int action_for_type1)
      : index_(static_cast<std::uint8_t>(((action_for_type0 & 1) << 1) |
                                         (action_for_type1 & 1))) {}

  static constexpr DeterministicStrategy FromIndex(int index) {
    return DeterministicStrategy((index >> 1) & 1, index & 1);
  }

  constexpr int operator()(int type) const {
    return type == 0 ? (index_ >> 1) & 1 : index_ & 1;
  }
  constexpr int index() const { return index_; }

  // "(y(0),y(1))", e.g. "(0,1)".
  std::string ToString() const;

  friend constexpr bool operator==(DeterministicStrategy,
                                   DeterministicStrategy) = default;
  friend constexpr auto operator<=>(DeterministicStrategy,
                                    DeterministicStrategy) = default;

 private:
  std::uint8_t index_ = 0;
};

inline constexpr int kNumStrategies = 4;
inline constexpr int kNumStrategyProfiles = 64;

struct DeterministicStrategyProfile {
  std::array<DeterministicStrategy, kNumPlayers> strategies{};

  DeterministicStrategy& operator[](Player p) {
    return strategies[PlayerIndex(p)];
  }
  const DeterministicStrategy& operator[](Player p) const {
    return strategies[PlayerIndex(p)];
  }

  // Canonical order: 16 * s_A + 4 * s_B + s_C.
  int index() const;
  static DeterministicStrategyProfile FromIndex(int index);
  DeterministicStrategyProfile Swapped(Player p, Player q) const;
  std::string ToString() const;

  friend bool operator==(const DeterministicStrategyProfile&,
                         const DeterministicStrategyProfile&) = default;
  friend auto operator<=>(const DeterministicStrategyProfile&,
                          const DeterministicStrategyProfile&) = default;
};

std::vector<DeterministicStrategyProfile> AllStrategyProfiles();

// p(y|x) = prod_i delta(y_i, s_i(x_i)).
ExactDistribution StrategyToDistribution(
    const DeterministicStrategyProfile& profile);

// One player's stochastic response for one hidden-variable value:
// rows[type][action] with each row summing to 1.
struct LocalResponse {
  std::array<std::array<Rational, 2>, 2> rows{};

  static LocalResponse Deterministic(DeterministicStrategy s);
};

// Finite-support local hidden-variable model:
//   p(y|x) = sum_l w_l p_A(y_A|x_A,l) p_B(y_B|x_B,l) p_C(y_C|x_C,l).
struct HiddenVariableModel {
  struct Component {
    Rational weight;
    std::array<LocalResponse, kNumPlayers> responses;
  };
  std::vector<Component> components;

  // Throws ValidationError for negative or non-normalized weights and for
  // response rows that are not probability distributions.
  void Validate() const;
};

ExactDistribution HiddenVariableModelToDistribution(
    const HiddenVariableModel& model);

// The two Bell expressions combined in the game:
//   kV011: <A0B1C1> + <A1B0C1> + <A1B1C0> - <A0B0C0>
//   kV100: <A1B0C0> + <A0B1C0> + <A0B0C1> - <A1B1C1>
// Local models satisfy |value| <= 2 for both.
enum class BellVariant { kV011, kV100 };

std::string BellVariantName(BellVariant variant);

// <A_{x_A} B_{x_B} C_{x_C}> with action 1 read as +1 and action 0 as -1.
template <typename T>
T TripleCorrelator(const ConditionalDistribution<T>& dist, TypeProfile x);

template <typename T>
T BellExpression(const ConditionalDistribution<T>& dist, BellVariant variant);

// The remaining Bell inequalities of the family: kV011 evaluated after the
// type relabeling x -> x XOR flip_mask (mask packed like TypeProfile).
// Mask 0 gives kV011 and mask 7 gives kV100.
template <typename T>
T RelabeledBellExpression(const ConditionalDistribution<T>& dist,
                          int flip_mask);

struct EquilibriumReport {
  DeterministicStrategyProfile profile;
  PayoffTriple<Rational> payoffs;
  bool fair = false;
  bool saturates_bound = false;
};

// Payoffs of a deterministic profile.
PayoffTriple<Rational> ProfilePayoffs(
    const UtilityTable& game, const Prior& prior,
    const DeterministicStrategyProfile& profile);

// Largest total payoff over the local hidden-variable family. The total is
// linear in the mixture weights and in each response row, so the maximum
// sits on a deterministic profile.
Rational ClassicalTotalBound(const UtilityTable& game, const Prior& prior);

// All deterministic profiles where no player has a strictly better
// deterministic deviation, in canonical profile order.
std::vector<EquilibriumReport> EnumerateDeterministicEquilibria(
    const UtilityTable& game, const Prior& prior);

struct NashVerdict {
  bool is_nash = true;
  // Set when is_nash is false: the first player (A, B, C order) with a
  // profitable deviation, and their payoff-maximizing deviation.
  std::optional<Player> deviator;
  std::optional<DeterministicStrategy> best_deviation;
  Rational current_payoff;
  Rational deviation_payoff;
};

// Only deterministic deviations are checked. A player's payoff is affine in
// each of their own response rows, so a mixed deviation never beats the
// best deterministic one.
NashVerdict IsNash(const UtilityTable& game, const Prior& prior,
                   const DeterministicStrategyProfile& profile);

struct AuditReport {
  Rational bound;  // ClassicalTotalBound
  Rational deterministic_max_total;
  std::vector<DeterministicStrategyProfile> maximizers;
  bool deterministic_within_bound = true;

  int samples = 0;
  std::uint64_t seed = 0;
  Rational sampled_max_total;
  bool samples_within_bound = true;
  // Fair samples (F_A = F_B = F_C) never exceed bound / 3 per player.
  int fair_samples = 0;
  bool fair_cap_holds = true;

  // max |Bell| over deterministic profiles and over the sampled mixtures.
  std::array<Rational, 2> deterministic_bell_max{};
  std::array<Rational, 2> sampled_bell_max{};
};

inline constexpr std::uint64_t kDefaultAuditSeed = 0;

// Random mixtures of random local responses, reproducible from the seed.
HiddenVariableModel RandomHiddenVariableModel(std::uint64_t seed, int index);

AuditReport ClassicalBoundAudit(const UtilityTable& game, const Prior& prior,
                                int samples,
                                std::uint64_t seed = kDefaultAuditSeed);

}  // namespace qgame

#endif  // QGAME_CLASSICAL_H_
