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

// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.h"
#include "qgame/classical.h"
#include "qgame/optimizer.h"
#include "qgame/quantum.h"
#include "qgame/table1.h"

namespace qgame {
namespace {

using std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 means no limit
  std::function<Outcome()> run;
};

std::string Fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

const Prior& Uniform() {
  static const Prior prior = Prior::Uniform();
  return prior;
}

std::set<int> EquilibriumSet(const UtilityTable& game) {
  std::set<int> out;
  for (const auto& r : EnumerateDeterministicEquilibria(game, Uniform())) {
    out.insert(r.profile.index());
  }
  return out;
}

// Brute-force maximum of the reduced objective
// (26 + 6 sin a - 4 cos a + 4 sin b + 6 cos b) / 48 over a dense grid,
// refined by golden-section search on each separable term.
double ReducedOptimumOracle() {
  auto term_max = [](double s, double c) {
    auto f = [&](double t) { return s * std::sin(t) + c * std::cos(t); };
    int best_i = 0;
    const int n = 100000;
    for (int i = 1; i < n; ++i) {
      if (f(2 * pi * i / n) > f(2 * pi * best_i / n)) best_i = i;
    }
    double lo = 2 * pi * (best_i - 1) / n, hi = 2 * pi * (best_i + 1) / n;
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int k = 0; k < 100; ++k) {
      const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
      if (f(m1) < f(m2)) lo = m1; else hi = m2;
    }
    return f((lo + hi) / 2);
  };
  return (26 + term_max(6, -4) + term_max(4, 6)) / 48;
}

const OptimumReport& DefaultOptimum() {
  static const OptimumReport report = MaximizePlanar();
  return report;
}

Outcome TableReproduction() {
  const auto found = EnumerateDeterministicEquilibria(Table1Game(), Uniform());
  const auto reference = testing::ReferenceEquilibria();
  if (found.size() != reference.size()) {
    return {false, std::to_string(found.size()) + " equilibria"};
  }
  int matched = 0;
  for (const auto& row : reference) {
    for (const auto& r : found) {
      if (r.profile == row.profile && r.payoffs == row.payoffs) ++matched;
    }
  }
  return {matched == 9, std::to_string(matched) + "/9 profiles and payoffs match"};
}

Outcome ClassicalBound() {
  const Rational bound(9, 4);
  bool ok = true;
  for (const auto& profile : AllStrategyProfiles()) {
    if (ProfilePayoffs(Table1Game(), Uniform(), profile).Total() > bound) ok = false;
  }
  for (const auto& row : testing::ReferenceEquilibria()) {
    if (ProfilePayoffs(Table1Game(), Uniform(), row.profile).Total() != bound) {
      ok = false;
    }
  }
  Rational sampled_max = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto dist =
        HiddenVariableModelToDistribution(RandomHiddenVariableModel(0, i));
    const Rational total = ExpectedPayoffs(Table1Game(), Uniform(), dist).Total();
    if (total > bound) ok = false;
    if (total > sampled_max) sampled_max = total;
  }
  return {ok, "sampled max " + FormatRational(sampled_max) + " <= 9/4"};
}

Outcome BellBound() {
  Rational max011 = 0, max100 = 0;
  for (const auto& profile : AllStrategyProfiles()) {
    const auto dist = StrategyToDistribution(profile);
    max011 = std::max(max011, Abs(BellExpression(dist, BellVariant::kV011)));
    max100 = std::max(max100, Abs(BellExpression(dist, BellVariant::kV100)));
  }
  return {max011 == 2 && max100 == 2,
          "max |V011| = " + FormatRational(max011) +
              ", max |V100| = " + FormatRational(max100)};
}

Outcome QuantumOptimum() {
  const OptimumReport& r = DefaultOptimum();
  const double oracle = ReducedOptimumOracle();
  const double analytic = (13 + 2 * std::sqrt(13.0)) / 24;
  const PlanarAngles reference{{0, -pi / 2, 0, -pi / 2, 2.1588, 0.5880}};
  const bool ok = std::abs(r.value - 0.842) < 1e-3 &&
                  std::abs(oracle - analytic) < 1e-9 &&
                  std::abs(r.value - oracle) < 1e-6 &&
                  GaugeEquivalent(r.angles, reference, 1e-3);
  return {ok, "value " + Fmt("%.12f", r.value) + ", oracle " + Fmt("%.12f", oracle) +
                  ", angle distance " +
                  Fmt("%.2e", AngleDistance(GaugeCanonicalize(r.angles), reference))};
}

Outcome QuantumBeatsClassical() {
  const double v = DefaultOptimum().value;
  return {v > 0.75 + 0.09 && 3 * v > 9.0 / 4,
          "value " + Fmt("%.6f", v) + ", total " + Fmt("%.6f", 3 * v)};
}

Outcome ClosedForm() {
  std::mt19937_64 rng(2026);
  const auto ghz = QuantumAdvisor::Ghz();
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const PlanarAngles a = testing::RandomPlanarAngles(rng);
    const auto f = QuantumPayoffs(Table1Game(), Uniform(), ghz,
                                  MeasurementSetting::Planar(a));
    const double closed = PlanarPayoff(a);
    for (double v : f.values) worst = std::max(worst, std::abs(v - closed));
  }
  return {worst < 1e-10, "max deviation " + Fmt("%.2e", worst)};
}

Outcome NoSignalling() {
  std::mt19937_64 rng(2027);
  const auto ghz = QuantumAdvisor::Ghz();
  double worst = 0;
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const MeasurementSetting s = i % 2 == 0
                                     ? MeasurementSetting::Planar(
                                           testing::RandomPlanarAngles(rng))
                                     : testing::RandomSetting(rng);
    const auto dist = QuantumDistribution(ghz, s);
    if (!CheckNoSignalling(dist, 1e-12).empty()) ok = false;
    worst = std::max(worst, MaxNoSignallingResidual(dist));
  }
  return {ok, "max residual " + Fmt("%.2e", worst)};
}

// True if `party` plays a fixed action for each of its types.
bool HasDeterministicMarginal(const ExactDistribution& dist, Player party) {
  for (int type = 0; type < 2; ++type) {
    Rational ones = 0;
    for (TypeProfile x : AllProfiles<TypeProfile>()) {
      if (x[party] != type) continue;
      for (ActionProfile y : AllProfiles<ActionProfile>()) {
        if (y[party] == 1) ones += dist(y, x) / 4;
      }
    }
    if (ones != 0 && ones != 1) return false;
  }
  return true;
}

Outcome Unrealizability() {
  std::mt19937_64 rng(2028);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const ProjectorPair p = Projectors(testing::RandomBloch(rng));
    for (Player party : kPlayers) {
      for (const Matrix2* proj : {&p.p0, &p.p1}) {
        worst = std::max(worst, std::abs(GhzSinglePartyMarginal(*proj, party) - 0.5));
      }
    }
  }
  // The unfair equilibria give some player a deterministic marginal.
  int deterministic_marginals = 0;
  for (const auto& r : EnumerateDeterministicEquilibria(Table1Game(), Uniform())) {
    if (r.fair) continue;
    const auto dist = StrategyToDistribution(r.profile);
    for (Player party : kPlayers) {
      if (HasDeterministicMarginal(dist, party)) {
        ++deterministic_marginals;
        break;
      }
    }
  }
  return {worst < 1e-12 && deterministic_marginals == 6,
          "max |marginal - 1/2| " + Fmt("%.2e", worst) + ", " +
              std::to_string(deterministic_marginals) +
              "/6 unfair equilibria with a deterministic marginal"};
}

Outcome Certification() {
  const BestResponseVerdict v = BestResponseCheck(
      MeasurementSetting::Planar(DefaultOptimum().angles), SearchMode::kPlanar);
  bool ok = true;
  for (const auto& d : v.players) ok = ok && d.improvement < 1e-6;
  return {ok, "max improvement " + Fmt("%.2e", v.max_improvement)};
}

Outcome AffineInvariance() {
  const std::set<int> base = EquilibriumSet(Table1Game());
  std::mt19937_64 rng(2029);
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    Rational alpha = Abs(testing::RandomRational(rng, 50, 17));
    if (alpha == 0) alpha = Rational(1, 3);
    const Rational beta = testing::RandomRational(rng, 50, 17);
    if (EquilibriumSet(AffineTransform(Table1Game(), alpha, beta)) == base) ++agree;
  }
  return {agree == 100, std::to_string(agree) + "/100 transforms preserve the set"};
}

int Run() {
  const std::vector<Criterion> criteria = {
      {1, "equilibrium table reproduction", 1, TableReproduction},
      {2, "classical total-payoff bound", 5, ClassicalBound},
      {3, "classical Bell bound", 1, BellBound},
      {4, "quantum optimum", 30, QuantumOptimum},
      {5, "quantum beats classical", 0, QuantumBeatsClassical},
      {6, "closed-form equivalence", 30, ClosedForm},
      {7, "no-signalling", 0, NoSignalling},
      {8, "classical unrealizability", 0, Unrealizability},
      {9, "equilibrium certification", 0, Certification},
      {10, "affine invariance", 0, AffineInvariance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      outcome.pass = false;
      outcome.detail += ", over time limit";
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%s; %.3f s)\n", outcome.pass ? "PASS" : "FAIL",
                c.id, c.name.c_str(), outcome.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace qgame

int main() { return qgame::Run(); }
