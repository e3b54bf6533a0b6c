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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "oracles.h"
#include "qgame/nelder_mead.h"
#include "qgame/optimizer.h"
#include "qgame/table1.h"

namespace qgame {
namespace {

using std::numbers::pi;

const double kOptimum = (13 + 2 * std::sqrt(13.0)) / 24;
const PlanarAngles kReferenceAngles{{0, -pi / 2, 0, -pi / 2, 2.1588, 0.5880}};

TEST_CASE("Nelder-Mead on a quadratic bowl") {
  auto bowl = [](std::span<const double> v) {
    return (v[0] - 1) * (v[0] - 1) + 4 * (v[1] + 2) * (v[1] + 2) + 3;
  };
  const std::vector<double> start{0, 0};
  const NelderMeadResult r = NelderMeadMinimize(bowl, start, 0.5, {});
  CHECK(r.converged);
  CHECK(r.point[0] == doctest::Approx(1).epsilon(1e-6));
  CHECK(r.point[1] == doctest::Approx(-2).epsilon(1e-6));
  CHECK(r.value == doctest::Approx(3));
}

TEST_CASE("dense scan of the reduced payoff") {
  // With phi1 = phi3 = 0 and phi2 = phi4 = -pi/2 the payoff reduces to
  // (26 + 6 sin p5 - 4 cos p5 + 4 sin p6 + 6 cos p6) / 48.
  double best = -1;
  for (int i = 0; i < 4000; ++i) {
    const double t = 2 * pi * i / 4000;
    best = std::max(best, 6 * std::sin(t) - 4 * std::cos(t));
    PlanarAngles a = kReferenceAngles;
    a[4] = t;
    a[5] = t;
    const double reduced = (26 + 6 * std::sin(t) - 4 * std::cos(t) +
                            4 * std::sin(t) + 6 * std::cos(t)) / 48;
    CHECK(std::abs(PlanarPayoff(a) - reduced) < 1e-14);
  }
  CHECK(std::abs(best - std::sqrt(52.0)) < 1e-5);
  CHECK(std::abs((26 + 2 * std::sqrt(52.0)) / 48 - kOptimum) < 1e-15);
}

TEST_CASE("default optimization finds the optimum") {
  const OptimumReport r = MaximizePlanar();
  CHECK(r.converged);
  CHECK(std::abs(r.value - kOptimum) < 1e-6);
  CHECK(std::abs(r.value - 0.842) < 1e-3);
  CHECK(r.angles[0] == 0.0);
  CHECK(r.angles[2] == 0.0);
  CHECK(GaugeEquivalent(r.angles, kReferenceAngles, 1e-3));
  CHECK(std::abs(r.value - PlanarPayoff(r.angles)) < 1e-10);
  for (double v : r.payoffs.values) CHECK(std::abs(v - r.value) < 1e-10);
  CHECK(r.bell_values[0] == doctest::Approx(12 / std::sqrt(13.0)).epsilon(1e-6));
  CHECK(r.bell_values[1] == doctest::Approx(-8 / std::sqrt(13.0)).epsilon(1e-6));

  // The reflection phi_{A,B} -> -phi, phi_C -> pi - phi gives a second,
  // gauge-inequivalent maximizer of the same value.
  const PlanarAngles mirror{{0, pi / 2, 0, pi / 2, pi - kReferenceAngles[4],
                             pi - kReferenceAngles[5]}};
  CHECK(std::abs(PlanarPayoff(mirror) - PlanarPayoff(kReferenceAngles)) < 1e-14);
  CHECK_FALSE(GaugeEquivalent(mirror, kReferenceAngles, 1e-3));
  int near_optimum = 0;
  for (const auto& m : r.local_maxima) {
    if (std::abs(m.value - kOptimum) < 1e-9) ++near_optimum;
  }
  CHECK(near_optimum == 2);
}

TEST_CASE("coarse search still lands near the optimum") {
  OptimizationConfig coarse;
  coarse.grid = 8;
  coarse.restarts = 1;
  CHECK(std::abs(MaximizePlanar(coarse).value - kOptimum) < 0.05);
}

TEST_CASE("determinism and restart monotonicity") {
  OptimizationConfig config;
  const OptimumReport a = MaximizePlanar(config);
  const OptimumReport b = MaximizePlanar(config);
  CHECK(a.angles == b.angles);
  CHECK(a.value == b.value);

  double previous = -1;
  for (int restarts = 1; restarts <= 8; ++restarts) {
    config.restarts = restarts;
    const double v = MaximizePlanar(config).value;
    CHECK(v >= previous - 1e-12);
    previous = v;
  }

  for (std::uint64_t seed : {1u, 2u, 17u}) {
    OptimizationConfig seeded;
    seeded.seed = seed;
    const OptimumReport r = MaximizePlanar(seeded);
    CHECK(std::abs(r.value - kOptimum) < 1e-6);
    CHECK(GaugeEquivalent(r.angles, a.angles, 1e-4));
  }
}

TEST_CASE("configuration validation") {
  OptimizationConfig config;
  CHECK_NOTHROW(config.Validate());
  config.restarts = 0;
  CHECK_THROWS_AS(MaximizePlanar(config), ValidationError);
  config = {};
  config.grid = 1;
  CHECK_THROWS_AS(config.Validate(), ValidationError);
  config = {};
  config.tolerance = 0;
  CHECK_THROWS_AS(config.Validate(), ValidationError);
  config = {};
  config.max_iterations = 0;
  CHECK_THROWS_AS(config.Validate(), ValidationError);
}

TEST_CASE("search modes") {
  CHECK(ParseSearchMode("planar") == SearchMode::kPlanar);
  CHECK(ParseSearchMode("full") == SearchMode::kFullSphere);
  CHECK(ParseSearchMode("full_sphere") == SearchMode::kFullSphere);
  CHECK_THROWS(ParseSearchMode("spherical"));
  CHECK(SearchModeName(SearchMode::kFullSphere) == "full_sphere");
}

TEST_CASE("best response at the optimum") {
  const auto setting = MeasurementSetting::Planar(MaximizePlanar().angles);
  const BestResponseVerdict planar = BestResponseCheck(setting, SearchMode::kPlanar);
  CHECK(planar.certified);
  CHECK(planar.max_improvement < 1e-6);
  for (const auto& d : planar.players) {
    CHECK(std::abs(d.current_payoff - kOptimum) < 1e-9);
    CHECK(d.best_payoff >= d.current_payoff - 1e-12);
  }

  const BestResponseVerdict full = BestResponseCheck(setting, SearchMode::kFullSphere);
  CHECK(full.mode == SearchMode::kFullSphere);
  CHECK(full.certified);
}

TEST_CASE("best response from the all-zero setting") {
  const auto setting = MeasurementSetting::Planar(PlanarAngles{});
  const BestResponseVerdict v = BestResponseCheck(setting, SearchMode::kPlanar);
  CHECK_FALSE(v.certified);
  CHECK(v.max_improvement > 1e-3);
  for (const auto& d : v.players) {
    CHECK(d.current_payoff == doctest::Approx(26.0 / 48));
    CHECK(d.improvement == doctest::Approx(d.best_payoff - d.current_payoff));
  }
  // A unilateral deviation cannot reach the joint optimum.
  for (const auto& d : v.players) CHECK(d.best_payoff < kOptimum + 1e-9);
}

TEST_CASE("quantum advantage") {
  const AdvantageReport r = QuantumAdvantageReport(Table1Game(), Prior::Uniform());
  CHECK(r.classical_bound == Rational(9, 4));
  CHECK(r.classical_fair_cap == Rational(3, 4));
  CHECK(std::abs(r.quantum.value - kOptimum) < 1e-6);
  CHECK(std::abs(r.advantage - (kOptimum - 0.75)) < 1e-6);
  CHECK(r.quantum_total > 9.0 / 4);
  CHECK(r.quantum_beats_classical);

  const AdvantageReport flat =
      QuantumAdvantageReport(UtilityTable::Constant(Rational(5, 2)), Prior::Uniform());
  CHECK(flat.classical_bound == Rational(15, 2));
  CHECK(std::abs(flat.advantage) < 1e-9);
  CHECK_FALSE(flat.quantum_beats_classical);
}

TEST_CASE("fair search agrees with the closed-form search on the bundled game") {
  const OptimumReport closed = MaximizePlanar();
  const OptimumReport fair = MaximizeFairPlanar(Table1Game(), Prior::Uniform());
  CHECK(std::abs(fair.value - closed.value) < 1e-9);
  CHECK(GaugeEquivalent(fair.angles, closed.angles, 1e-4));
}

}  // namespace
}  // namespace qgame
