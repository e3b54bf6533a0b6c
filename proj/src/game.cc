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

#include "qgame/game.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace qgame {
namespace {

constexpr std::array<std::pair<Player, Player>, 3> kTranspositions = {{
    {Player::kA, Player::kB},
    {Player::kA, Player::kC},
    {Player::kB, Player::kC},
}};

Player Spectator(Player p, Player q) {
  return static_cast<Player>(3 - PlayerIndex(p) - PlayerIndex(q));
}

double Magnitude(const Rational& v) { return std::abs(ToDouble(v)); }
double Magnitude(double v) { return std::abs(v); }

}  // namespace

char PlayerName(Player p) { return static_cast<char>('A' + PlayerIndex(p)); }

Player ParsePlayer(std::string_view name) {
  if (name == "A") return Player::kA;
  if (name == "B") return Player::kB;
  if (name == "C") return Player::kC;
  throw std::invalid_argument("unknown player \"" + std::string(name) + "\"");
}

template <typename Profile>
Profile ParseProfile(std::string_view text) {
  if (text.size() != 3 ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c == '0' || c == '1'; })) {
    throw std::invalid_argument("expected three bits like \"010\", got \"" +
                                std::string(text) + "\"");
  }
  return Profile(text[0] - '0', text[1] - '0', text[2] - '0');
}

template TypeProfile ParseProfile<TypeProfile>(std::string_view);
template ActionProfile ParseProfile<ActionProfile>(std::string_view);

UtilityTable::UtilityTable(const Generator& generator) {
  for (Player p : kPlayers) {
    for (TypeProfile x : AllProfiles<TypeProfile>()) {
      for (ActionProfile y : AllProfiles<ActionProfile>()) {
        entries_[Offset(p, x, y)] = generator(p, x, y);
      }
    }
  }
}

UtilityTable UtilityTable::Constant(const Rational& value) {
  return UtilityTable([&](Player, TypeProfile, ActionProfile) { return value; });
}

UtilityTable UtilityTable::WithEntry(Player p, TypeProfile x, ActionProfile y,
                                     const Rational& value) const {
  UtilityTable copy = *this;
  copy.entries_[Offset(p, x, y)] = value;
  return copy;
}

Rational UtilityTable::MinEntry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

Rational UtilityTable::MaxEntry() const {
  return *std::max_element(entries_.begin(), entries_.end());
}

Prior::Prior(const std::array<Rational, 8>& weights) : weights_(weights) {
  Rational sum = 0;
  for (TypeProfile x : AllProfiles<TypeProfile>()) {
    if (weights_[x.index()] < 0) {
      throw ValidationError("prior[\"" + x.ToString() + "\"] is negative (" +
                            FormatRational(weights_[x.index()]) + ")");
    }
    sum += weights_[x.index()];
  }
  if (sum != 1) {
    throw ValidationError("prior entries sum to " + FormatRational(sum) +
                          ", expected 1");
  }
}

Prior Prior::Uniform() {
  std::array<Rational, 8> w;
  w.fill(Rational(1, 8));
  return Prior(w);
}

template <typename T>
ConditionalDistribution<T>::ConditionalDistribution(
    const std::function<T(ActionProfile, TypeProfile)>& generator)
    : table_{} {
  for (TypeProfile x : AllProfiles<TypeProfile>()) {
    for (ActionProfile y : AllProfiles<ActionProfile>()) {
      table_[x.index()][y.index()] = generator(y, x);
    }
  }
}

template <typename T>
void ConditionalDistribution<T>::Validate(double tol) const {
  constexpr bool kExact = std::is_same_v<T, Rational>;
  for (TypeProfile x : AllProfiles<TypeProfile>()) {
    T sum = 0;
    for (ActionProfile y : AllProfiles<ActionProfile>()) {
      const T& v = table_[x.index()][y.index()];
      bool negative = false;
      if constexpr (kExact) {
        negative = v < 0;
      } else {
        negative = v < -tol;
      }
      if (negative) {
        throw ValidationError("distribution row x=" + x.ToString() +
                              " has negative entry at y=" + y.ToString());
      }
      sum += v;
    }
    bool bad_sum = false;
    if constexpr (kExact) {
      bad_sum = sum != 1;
    } else {
      bad_sum = std::abs(sum - 1.0) > tol;
    }
    if (bad_sum) {
      throw ValidationError("distribution row x=" + x.ToString() +
                            " sums to " + std::to_string(Magnitude(sum)) +
                            ", expected 1");
    }
  }
}

template class ConditionalDistribution<Rational>;
template class ConditionalDistribution<double>;

RealDistribution ToReal(const ExactDistribution& dist) {
  return RealDistribution([&](ActionProfile y, TypeProfile x) {
    return ToDouble(dist(y, x));
  });
}

PayoffTriple<Rational> ExpectedPayoffs(const UtilityTable& game,
                                       const Prior& prior,
                                       const ExactDistribution& dist) {
  dist.Validate();
  PayoffTriple<Rational> payoffs;
  for (TypeProfile x : AllProfiles<TypeProfile>()) {
    if (prior[x] == 0) continue;
    for (ActionProfile y : AllProfiles<ActionProfile>()) {
      const Rational weight = prior[x] * dist(y, x);
      if (weight == 0) continue;
      for (Player p : kPlayers) payoffs[p] += weight * game(p, x, y);
    }
  }
  return payoffs;
}

PayoffTriple<double> ExpectedPayoffs(const UtilityTable& game,
                                     const Prior& prior,
                                     const RealDistribution& dist,
                                     double tol) {
  dist.Validate(tol);
  PayoffTriple<double> payoffs;
  for (TypeProfile x : AllProfiles<TypeProfile>()) {
    const double px = ToDouble(prior[x]);
    for (ActionProfile y : AllProfiles<ActionProfile>()) {
      const double weight = px * dist(y, x);
      for (Player p : kPlayers) payoffs[p] += weight * ToDouble(game(p, x, y));
    }
  }
  return payoffs;
}

std::vector<SymmetryViolation> CheckPlayerSymmetry(const UtilityTable& game) {
  std::vector<SymmetryViolation> violations;
  for (const auto& [p, q] : kTranspositions) {
    const Player r = Spectator(p, q);
    for (TypeProfile x : AllProfiles<TypeProfile>()) {
      for (ActionProfile y : AllProfiles<ActionProfile>()) {
        const TypeProfile sx = x.Swapped(p, q);
        const ActionProfile sy = y.Swapped(p, q);
        if (game(p, x, y) != game(q, sx, sy)) {
          violations.push_back({p, q, false, x, y, game(p, x, y),
                                game(q, sx, sy)});
        }
        if (game(r, x, y) != game(r, sx, sy)) {
          violations.push_back({p, q, true, x, y, game(r, x, y),
                                game(r, sx, sy)});
        }
      }
    }
  }
  return violations;
}

UtilityTable AffineTransform(const UtilityTable& game, const Rational& alpha,
                             const Rational& beta) {
  if (alpha <= 0) {
    throw ValidationError("affine scale must be positive, got " +
                          FormatRational(alpha));
  }
  return UtilityTable([&](Player p, TypeProfile x, ActionProfile y) {
    return alpha * game(p, x, y) + beta;
  });
}

namespace {

// Calls visit(varied, context, others, difference) for every no-signalling
// relation: the marginal over the varied player's action at types x with
// the varied type 0, minus the same marginal with the varied type 1.
template <typename T, typename Visitor>
void ForEachMarginalDifference(const ConditionalDistribution<T>& dist,
                               Visitor&& visit) {
  for (Player varied : kPlayers) {
    for (TypeProfile x : AllProfiles<TypeProfile>()) {
      if (x[varied] != 0) continue;
      const TypeProfile x1 = x.With(varied, 1);
      for (ActionProfile y : AllProfiles<ActionProfile>()) {
        if (y[varied] != 0) continue;
        T diff = 0;
        for (int b = 0; b < 2; ++b) {
          const ActionProfile yb = y.With(varied, b);
          diff += dist(yb, x) - dist(yb, x1);
        }
        visit(varied, x, y, diff);
      }
    }
  }
}

}  // namespace

template <typename T>
std::vector<NoSignallingViolation> CheckNoSignalling(
    const ConditionalDistribution<T>& dist, double tol) {
  std::vector<NoSignallingViolation> violations;
  ForEachMarginalDifference(
      dist, [&](Player varied, TypeProfile x, ActionProfile y, const T& diff) {
        bool violated = false;
        if constexpr (std::is_same_v<T, Rational>) {
          violated = diff != 0;
        } else {
          violated = Magnitude(diff) > tol;
        }
        if (violated) violations.push_back({varied, x, y, Magnitude(diff)});
      });
  return violations;
}

template <typename T>
double MaxNoSignallingResidual(const ConditionalDistribution<T>& dist) {
  double worst = 0.0;
  ForEachMarginalDifference(
      dist, [&](Player, TypeProfile, ActionProfile, const T& diff) {
        worst = std::max(worst, Magnitude(diff));
      });
  return worst;
}

template <typename T>
ConditionalDistribution<T> SwapPlayers(const ConditionalDistribution<T>& dist,
                                       Player p, Player q) {
  return ConditionalDistribution<T>([&](ActionProfile y, TypeProfile x) {
    return dist(y.Swapped(p, q), x.Swapped(p, q));
  });
}

template std::vector<NoSignallingViolation> CheckNoSignalling(
    const ExactDistribution&, double);
template std::vector<NoSignallingViolation> CheckNoSignalling(
    const RealDistribution&, double);
template double MaxNoSignallingResidual(const ExactDistribution&);
template double MaxNoSignallingResidual(const RealDistribution&);
template ExactDistribution SwapPlayers(const ExactDistribution&, Player,
                                       Player);
template RealDistribution SwapPlayers(const RealDistribution&, Player, Player);

}  // namespace qgame
