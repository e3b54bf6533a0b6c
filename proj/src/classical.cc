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

#include "qgame/classical.h"

#include <algorithm>
#include <random>

namespace qgame {

std::string DeterministicStrategy::ToString() const {
  return "(" + std::to_string((*this)(0)) + "," + std::to_string((*this)(1)) +
         ")";
}

int DeterministicStrategyProfile::index() const {
  return 16 * strategies[0].index() + 4 * strategies[1].index() +
         strategies[2].index();
}

DeterministicStrategyProfile DeterministicStrategyProfile::FromIndex(
    int index) {
  DeterministicStrategyProfile profile;
  profile.strategies = {DeterministicStrategy::FromIndex((index >> 4) & 3),
                        DeterministicStrategy::FromIndex((index >> 2) & 3),
                        DeterministicStrategy::FromIndex(index & 3)};
  return profile;
}

DeterministicStrategyProfile DeterministicStrategyProfile::Swapped(
    Player p, Player q) const {
  DeterministicStrategyProfile swapped = *this;
  std::swap(swapped[p], swapped[q]);
  return swapped;
}

std::string DeterministicStrategyProfile::ToString() const {
  return strategies[0].ToString() + " " + strategies[1].ToString() + " " +
         strategies[2].ToString();
}

std::vector<DeterministicStrategyProfile> AllStrategyProfiles() {
  std::vector<DeterministicStrategyProfile> all;
  all.reserve(kNumStrategyProfiles);
  for (int i = 0; i < kNumStrategyProfiles; ++i) {
    all.push_back(DeterministicStrategyProfile::FromIndex(i));
  }
  return all;
}

ExactDistribution StrategyToDistribution(
    const DeterministicStrategyProfile& profile) {
  return ExactDistribution([&](ActionProfile y, TypeProfile x) {
    for (Player p : kPlayers) {
      if (y[p] != profile[p](x[p])) return Rational(0);
    }
    return Rational(1);
  });
}

LocalResponse LocalResponse::Deterministic(DeterministicStrategy s) {
  LocalResponse r;
  for (int type = 0; type < 2; ++type) {
    r.rows[type][s(type)] = 1;
    r.rows[type][1 - s(type)] = 0;
  }
  return r;
}

void HiddenVariableModel::Validate() const {
  if (components.empty()) {
    throw ValidationError("hidden-variable model has no components");
  }
  Rational total = 0;
  for (std::size_t l = 0; l < components.size(); ++l) {
    const Component& c = components[l];
    if (c.weight < 0) {
      throw ValidationError("hidden-variable weight " + std::to_string(l) +
                            " is negative");
    }
    total += c.weight;
    for (Player p : kPlayers) {
      for (int type = 0; type < 2; ++type) {
        const auto& row = c.responses[PlayerIndex(p)].rows[type];
        if (row[0] < 0 || row[1] < 0 || row[0] + row[1] != 1) {
          throw ValidationError(
              std::string("response of player ") + PlayerName(p) +
              " for type " + std::to_string(type) + " in component " +
              std::to_string(l) + " is not a probability row");
        }
      }
    }
  }
  if (total != 1) {
    throw ValidationError("hidden-variable weights sum to " +
                          FormatRational(total) + ", expected 1");
  }
}

ExactDistribution HiddenVariableModelToDistribution(
    const HiddenVariableModel& model) {
  model.Validate();
  ExactDistribution::Table table{};
  for (const auto& c : model.components) {
    if (c.weight == 0) continue;
    for (TypeProfile x : AllProfiles<TypeProfile>()) {
      for (ActionProfile y : AllProfiles<ActionProfile>()) {
        Rational term = c.weight;
        for (Player p : kPlayers) {
          term *= c.responses[PlayerIndex(p)].rows[x[p]][y[p]];
          if (term == 0) break;
        }
        table[x.index()][y.index()] += term;
      }
    }
  }
  return ExactDistribution(table);
}

std::string BellVariantName(BellVariant variant) {
  return variant == BellVariant::kV011 ? "V011" : "V100";
}

template <typename T>
T TripleCorrelator(const ConditionalDistribution<T>& dist, TypeProfile x) {
  T value = 0;
  for (ActionProfile y : AllProfiles<ActionProfile>()) {
    const int zeros = 3 - (y[Player::kA] + y[Player::kB] + y[Player::kC]);
    if (zeros % 2 == 0) {
      value += dist(y, x);
    } else {
      value -= dist(y, x);
    }
  }
  return value;
}

template <typename T>
T RelabeledBellExpression(const ConditionalDistribution<T>& dist,
                          int flip_mask) {
  auto corr = [&](int a, int b, int c) {
    return TripleCorrelator(dist, TypeProfile(a, b, c).Flipped(flip_mask));
  };
  return corr(0, 1, 1) + corr(1, 0, 1) + corr(1, 1, 0) - corr(0, 0, 0);
}

template <typename T>
T BellExpression(const ConditionalDistribution<T>& dist, BellVariant variant) {
  return RelabeledBellExpression(dist, variant == BellVariant::kV011 ? 0 : 7);
}

template Rational TripleCorrelator(const ExactDistribution&, TypeProfile);
template double TripleCorrelator(const RealDistribution&, TypeProfile);
template Rational BellExpression(const ExactDistribution&, BellVariant);
template double BellExpression(const RealDistribution&, BellVariant);
template Rational RelabeledBellExpression(const ExactDistribution&, int);
template double RelabeledBellExpression(const RealDistribution&, int);

PayoffTriple<Rational> ProfilePayoffs(
    const UtilityTable& game, const Prior& prior,
    const DeterministicStrategyProfile& profile) {
  PayoffTriple<Rational> payoffs;
  for (TypeProfile x : AllProfiles<TypeProfile>()) {
    const ActionProfile y(profile[Player::kA](x[Player::kA]),
                          profile[Player::kB](x[Player::kB]),
                          profile[Player::kC](x[Player::kC]));
    for (Player p : kPlayers) payoffs[p] += prior[x] * game(p, x, y);
  }
  return payoffs;
}

Rational ClassicalTotalBound(const UtilityTable& game, const Prior& prior) {
  Rational best = ProfilePayoffs(game, prior, {}).Total();
  for (const auto& profile : AllStrategyProfiles()) {
    best = std::max(best, ProfilePayoffs(game, prior, profile).Total());
  }
  return best;
}

NashVerdict IsNash(const UtilityTable& game, const Prior& prior,
                   const DeterministicStrategyProfile& profile) {
  const PayoffTriple<Rational> current = ProfilePayoffs(game, prior, profile);
  NashVerdict verdict;
  for (Player p : kPlayers) {
    std::optional<DeterministicStrategy> best;
    Rational best_payoff = current[p];
    for (int s = 0; s < kNumStrategies; ++s) {
      DeterministicStrategyProfile deviation = profile;
      deviation[p] = DeterministicStrategy::FromIndex(s);
      const Rational payoff = ProfilePayoffs(game, prior, deviation)[p];
      if (payoff > best_payoff) {
        best_payoff = payoff;
        best = deviation[p];
      }
    }
    if (best) {
      verdict.is_nash = false;
      verdict.deviator = p;
      verdict.best_deviation = best;
      verdict.current_payoff = current[p];
      verdict.deviation_payoff = best_payoff;
      return verdict;
    }
  }
  return verdict;
}

std::vector<EquilibriumReport> EnumerateDeterministicEquilibria(
    const UtilityTable& game, const Prior& prior) {
  std::array<PayoffTriple<Rational>, kNumStrategyProfiles> payoffs;
  for (const auto& profile : AllStrategyProfiles()) {
    payoffs[profile.index()] = ProfilePayoffs(game, prior, profile);
  }
  const Rational bound = std::max_element(payoffs.begin(), payoffs.end(),
                                          [](const auto& a, const auto& b) {
                                            return a.Total() < b.Total();
                                          })
                             ->Total();

  std::vector<EquilibriumReport> equilibria;
  for (const auto& profile : AllStrategyProfiles()) {
    const auto& current = payoffs[profile.index()];
    bool stable = true;
    for (Player p : kPlayers) {
      for (int s = 0; s < kNumStrategies && stable; ++s) {
        DeterministicStrategyProfile deviation = profile;
        deviation[p] = DeterministicStrategy::FromIndex(s);
        if (payoffs[deviation.index()][p] > current[p]) stable = false;
      }
    }
    if (!stable) continue;
    equilibria.push_back(
        {profile, current, current.AllEqual(), current.Total() == bound});
  }
  return equilibria;
}

HiddenVariableModel RandomHiddenVariableModel(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  const int support = uniform(1, 4);
  std::vector<int> raw_weights(support);
  int weight_sum = 0;
  for (int& w : raw_weights) {
    w = uniform(1, 12);
    weight_sum += w;
  }

  HiddenVariableModel model;
  for (int l = 0; l < support; ++l) {
    HiddenVariableModel::Component c;
    c.weight = Rational(raw_weights[l], weight_sum);
    for (auto& response : c.responses) {
      for (auto& row : response.rows) {
        // Half of the rows are deterministic, the rest quarter-grained.
        const int quarters = rng() % 2 == 0 ? 4 * uniform(0, 1) : uniform(0, 4);
        row[1] = Rational(quarters, 4);
        row[0] = 1 - row[1];
      }
    }
    model.components.push_back(c);
  }
  return model;
}

AuditReport ClassicalBoundAudit(const UtilityTable& game, const Prior& prior,
                                int samples, std::uint64_t seed) {
  AuditReport report;
  report.bound = ClassicalTotalBound(game, prior);
  report.samples = samples;
  report.seed = seed;

  bool first = true;
  for (const auto& profile : AllStrategyProfiles()) {
    const Rational total = ProfilePayoffs(game, prior, profile).Total();
    if (first || total > report.deterministic_max_total) {
      report.deterministic_max_total = total;
      report.maximizers.clear();
      first = false;
    }
    if (total == report.deterministic_max_total) {
      report.maximizers.push_back(profile);
    }
    if (total > report.bound) report.deterministic_within_bound = false;

    const ExactDistribution dist = StrategyToDistribution(profile);
    for (BellVariant v : {BellVariant::kV011, BellVariant::kV100}) {
      auto& slot = report.deterministic_bell_max[static_cast<int>(v)];
      slot = std::max(slot, Abs(BellExpression(dist, v)));
    }
  }

  const Rational fair_cap = report.bound / kNumPlayers;
  for (int i = 0; i < samples; ++i) {
    const ExactDistribution dist =
        HiddenVariableModelToDistribution(RandomHiddenVariableModel(seed, i));
    const PayoffTriple<Rational> payoffs = ExpectedPayoffs(game, prior, dist);
    const Rational total = payoffs.Total();
    if (i == 0 || total > report.sampled_max_total) {
      report.sampled_max_total = total;
    }
    if (total > report.bound) report.samples_within_bound = false;
    if (payoffs.AllEqual()) {
      ++report.fair_samples;
      if (payoffs[Player::kA] > fair_cap) report.fair_cap_holds = false;
    }
    for (BellVariant v : {BellVariant::kV011, BellVariant::kV100}) {
      auto& slot = report.sampled_bell_max[static_cast<int>(v)];
      slot = std::max(slot, Abs(BellExpression(dist, v)));
    }
  }
  return report;
}

}  // namespace qgame
