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

#ifndef QGAME_TESTS_ORACLES_H_
#define QGAME_TESTS_ORACLES_H_

// Reference computations used only by tests. They take a different route
// from the library: integer-scaled sums instead of rational arithmetic,
// explicit Kronecker products instead of index arithmetic.

#include <cstdint>
#include <numeric>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "qgame/classical.h"
#include "qgame/game.h"
#include "qgame/quantum.h"

namespace qgame::testing {

// F_i as (integer numerator, common denominator): every factor is scaled to
// an integer by the lcm of its denominators before summing.
struct ScaledPayoff {
  __int128 numerator = 0;
  __int128 denominator = 1;
};

inline std::int64_t ToInt64(const boost::multiprecision::cpp_int& v) {
  return v.convert_to<std::int64_t>();
}

inline std::array<ScaledPayoff, 3> IntegerScaledPayoffs(
    const UtilityTable& game, const Prior& prior,
    const ExactDistribution& dist) {
  std::int64_t lu = 1, lp = 1, ld = 1;
  for (TypeProfile x : AllProfiles<TypeProfile>()) {
    lp = std::lcm(lp, ToInt64(denominator(prior[x])));
    for (ActionProfile y : AllProfiles<ActionProfile>()) {
      ld = std::lcm(ld, ToInt64(denominator(dist(y, x))));
      for (Player p : kPlayers) {
        lu = std::lcm(lu, ToInt64(denominator(game(p, x, y))));
      }
    }
  }
  auto scaled = [](const Rational& v, std::int64_t l) {
    return static_cast<__int128>(ToInt64(numerator(v)) *
                                 (l / ToInt64(denominator(v))));
  };
  std::array<ScaledPayoff, 3> out;
  for (Player p : kPlayers) {
    auto& f = out[PlayerIndex(p)];
    f.denominator = static_cast<__int128>(lu) * lp * ld;
    for (TypeProfile x : AllProfiles<TypeProfile>()) {
      for (ActionProfile y : AllProfiles<ActionProfile>()) {
        f.numerator += scaled(prior[x], lp) * scaled(dist(y, x), ld) *
                       scaled(game(p, x, y), lu);
      }
    }
  }
  return out;
}

inline bool Matches(const ScaledPayoff& scaled, const Rational& value) {
  // a / b == n / d  <=>  a * d == n * b
  return scaled.numerator * ToInt64(denominator(value)) ==
         static_cast<__int128>(ToInt64(numerator(value))) * scaled.denominator;
}

// p(y|x) via an explicit 8x8 Kronecker product of the three projectors.
inline double KroneckerProbability(const Matrix8& rho,
                                   const MeasurementSetting& setting,
                                   ActionProfile y, TypeProfile x) {
  const Matrix2 a = Projectors(setting(Player::kA, x[Player::kA]))[y[Player::kA]];
  const Matrix2 b = Projectors(setting(Player::kB, x[Player::kB]))[y[Player::kB]];
  const Matrix2 c = Projectors(setting(Player::kC, x[Player::kC]))[y[Player::kC]];
  const Eigen::Matrix4cd ab = Eigen::kroneckerProduct(a, b).eval();
  const Matrix8 abc = Eigen::kroneckerProduct(ab, c).eval();
  return (rho * abc).trace().real();
}

inline double UniformAngle(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline PlanarAngles RandomPlanarAngles(std::mt19937_64& rng) {
  PlanarAngles a;
  for (double& phi : a.phi) phi = UniformAngle(rng, -M_PI, M_PI);
  return a;
}

inline BlochObservable RandomBloch(std::mt19937_64& rng) {
  // Uniform on the sphere.
  const double z = UniformAngle(rng, -1.0, 1.0);
  return {std::acos(z), UniformAngle(rng, -M_PI, M_PI)};
}

inline MeasurementSetting RandomSetting(std::mt19937_64& rng) {
  MeasurementSetting s;
  for (auto& pair : s.observables) pair = {RandomBloch(rng), RandomBloch(rng)};
  return s;
}

inline Rational RandomRational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

// Table 2: the nine deterministic equilibria of the bundled game with their
// payoffs, in the reference order.
struct ReferenceEquilibrium {
  DeterministicStrategyProfile profile;
  PayoffTriple<Rational> payoffs;
};

inline DeterministicStrategyProfile Profile(int a0, int a1, int b0, int b1,
                                            int c0, int c1) {
  return {{DeterministicStrategy(a0, a1), DeterministicStrategy(b0, b1),
           DeterministicStrategy(c0, c1)}};
}

inline std::vector<ReferenceEquilibrium> ReferenceEquilibria() {
  const Rational a(5, 8), b(13, 16), c(11, 8), d(7, 16), f(3, 4);
  return {
      {Profile(0, 1, 0, 0, 0, 0), {{a, b, b}}},
      {Profile(0, 0, 0, 1, 0, 0), {{b, a, b}}},
      {Profile(0, 0, 0, 0, 0, 1), {{b, b, a}}},
      {Profile(1, 0, 0, 1, 0, 1), {{c, d, d}}},
      {Profile(0, 1, 1, 0, 0, 1), {{d, c, d}}},
      {Profile(0, 1, 0, 1, 1, 0), {{d, d, c}}},
      {Profile(0, 1, 1, 1, 1, 1), {{f, f, f}}},
      {Profile(1, 1, 0, 1, 1, 1), {{f, f, f}}},
      {Profile(1, 1, 1, 1, 0, 1), {{f, f, f}}},
  };
}

}  // namespace qgame::testing

#endif  // QGAME_TESTS_ORACLES_H_
