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

#ifndef QGAME_GAME_H_
#define QGAME_GAME_H_

// Three-player Bayesian game with binary types and actions: utilities,
// prior, conditional action distributions and the expected payoff
//
//   F_i = sum_{x,y} P(x) p(y|x) u_i(x, y).

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgame/rational.h"

namespace qgame {

inline constexpr double kDefaultTolerance = 1e-9;

// Raised when an input violates a documented invariant (bad prior,
// non-normalized distribution, invalid transform parameters).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Player : int { kA = 0, kB = 1, kC = 2 };

inline constexpr int kNumPlayers = 3;
inline constexpr std::array<Player, kNumPlayers> kPlayers = {
    Player::kA, Player::kB, Player::kC};

constexpr int PlayerIndex(Player p) { return static_cast<int>(p); }
char PlayerName(Player p);
// Accepts "A", "B" or "C".
Player ParsePlayer(std::string_view name);

// Three bits, one per player, packed as index = 4*b_A + 2*b_B + b_C. The
// same order is used for the 8-dimensional Hilbert space basis |b_A b_B b_C>.
template <typename Tag>
class BitTriple {
 public:
  static constexpr int kCount = 8;

  constexpr BitTriple() = default;
  constexpr BitTriple(int a, int b, int c)
      : index_(static_cast<std::uint8_t>(((a & 1) << 2) | ((b & 1) << 1) |
                                         (c & 1))) {}

  static constexpr BitTriple FromIndex(int index) {
    BitTriple t;
    t.index_ = static_cast<std::uint8_t>(index & 7);
    return t;
  }

  constexpr int index() const { return index_; }
  constexpr int operator[](Player p) const {
    return (index_ >> (2 - PlayerIndex(p))) & 1;
  }

  constexpr BitTriple With(Player p, int bit) const {
    const int shift = 2 - PlayerIndex(p);
    BitTriple t;
    t.index_ = static_cast<std::uint8_t>((index_ & ~(1 << shift)) |
                                         ((bit & 1) << shift));
    return t;
  }

  constexpr BitTriple Swapped(Player p, Player q) const {
    return With(p, (*this)[q]).With(q, (*this)[p]);
  }

  // Bit-wise XOR with a relabeling mask given in the same packed layout.
  constexpr BitTriple Flipped(int mask) const {
    return FromIndex(index_ ^ (mask & 7));
  }

  // "010" style, A first.
  std::string ToString() const {
    return {static_cast<char>('0' + (*this)[Player::kA]),
            static_cast<char>('0' + (*this)[Player::kB]),
            static_cast<char>('0' + (*this)[Player::kC])};
  }

  friend constexpr bool operator==(BitTriple, BitTriple) = default;
  friend constexpr auto operator<=>(BitTriple, BitTriple) = default;

 private:
  std::uint8_t index_ = 0;
};

struct TypeTag {};
struct ActionTag {};
using TypeProfile = BitTriple<TypeTag>;
using ActionProfile = BitTriple<ActionTag>;

// Parses "010" into a profile; throws std::invalid_argument otherwise.
template <typename Profile>
Profile ParseProfile(std::string_view text);

template <typename Profile>
constexpr std::array<Profile, 8> AllProfiles() {
  std::array<Profile, 8> all{};
  for (int i = 0; i < 8; ++i) all[i] = Profile::FromIndex(i);
  return all;
}

// u_i(x, y) for every player, type profile and action profile.
class UtilityTable {
 public:
  using Entries = std::array<Rational, kNumPlayers * 8 * 8>;
  using Generator =
      std::function<Rational(Player, TypeProfile, ActionProfile)>;

  // All-zero table.
  UtilityTable() = default;
  explicit UtilityTable(const Generator& generator);

  static UtilityTable Constant(const Rational& value);

  const Rational& operator()(Player p, TypeProfile x, ActionProfile y) const {
    return entries_[Offset(p, x, y)];
  }

  UtilityTable WithEntry(Player p, TypeProfile x, ActionProfile y,
                         const Rational& value) const;

  Rational MinEntry() const;
  Rational MaxEntry() const;

  friend bool operator==(const UtilityTable&, const UtilityTable&) = default;

 private:
  static constexpr std::size_t Offset(Player p, TypeProfile x,
                                      ActionProfile y) {
    return static_cast<std::size_t>(PlayerIndex(p) * 64 + x.index() * 8 +
                                    y.index());
  }

  Entries entries_{};
};

// Distribution of type profiles. Entries are nonnegative and sum to 1.
class Prior {
 public:
  // Throws ValidationError naming the offending entry.
  explicit Prior(const std::array<Rational, 8>& weights);

  static Prior Uniform();

  const Rational& operator[](TypeProfile x) const {
    return weights_[x.index()];
  }

  friend bool operator==(const Prior&, const Prior&) = default;

 private:
  std::array<Rational, 8> weights_;
};

// p(y|x): row x is the distribution of the action triple given types x.
// Classical sources use Rational, quantum sources use double.
template <typename T>
class ConditionalDistribution {
 public:
  using Table = std::array<std::array<T, 8>, 8>;  // [x][y]

  ConditionalDistribution() : table_{} {}
  explicit ConditionalDistribution(const Table& table) : table_(table) {}
  explicit ConditionalDistribution(
      const std::function<T(ActionProfile, TypeProfile)>& generator);

  const T& operator()(ActionProfile y, TypeProfile x) const {
    return table_[x.index()][y.index()];
  }
  const Table& table() const { return table_; }

  // Throws ValidationError naming the first bad row: an entry below -tol or
  // a row sum off by more than tol. Exact distributions ignore tol.
  void Validate(double tol = kDefaultTolerance) const;

  friend bool operator==(const ConditionalDistribution&,
                         const ConditionalDistribution&) = default;

 private:
  Table table_;
};

using ExactDistribution = ConditionalDistribution<Rational>;
using RealDistribution = ConditionalDistribution<double>;

RealDistribution ToReal(const ExactDistribution& dist);

template <typename T>
struct PayoffTriple {
  std::array<T, kNumPlayers> values{};

  T& operator[](Player p) { return values[PlayerIndex(p)]; }
  const T& operator[](Player p) const { return values[PlayerIndex(p)]; }
  T Total() const { return values[0] + values[1] + values[2]; }
  bool AllEqual() const {
    return values[0] == values[1] && values[1] == values[2];
  }

  friend bool operator==(const PayoffTriple&, const PayoffTriple&) = default;
};

PayoffTriple<Rational> ExpectedPayoffs(const UtilityTable& game,
                                       const Prior& prior,
                                       const ExactDistribution& dist);
PayoffTriple<double> ExpectedPayoffs(const UtilityTable& game,
                                     const Prior& prior,
                                     const RealDistribution& dist,
                                     double tol = kDefaultTolerance);

// One failed permutation relation. For the transposition (first, second)
// either u_first(x, y) == u_second(swap x, swap y) failed (spectator is
// false), or the remaining player's utility was not invariant under the
// swap (spectator is true).
struct SymmetryViolation {
  Player first;
  Player second;
  bool spectator;
  TypeProfile x;
  ActionProfile y;
  Rational lhs;
  Rational rhs;
};

std::vector<SymmetryViolation> CheckPlayerSymmetry(const UtilityTable& game);

// u -> alpha * u + beta. Throws ValidationError unless alpha > 0.
UtilityTable AffineTransform(const UtilityTable& game, const Rational& alpha,
                             const Rational& beta);

// The marginal of the two players other than `varied`, taken at action
// pair `others` (the varied player's slot is 0), changes when only the
// varied player's type flips from 0 to 1 in `context`.
struct NoSignallingViolation {
  Player varied;
  TypeProfile context;
  ActionProfile others;
  double residual;
};

template <typename T>
std::vector<NoSignallingViolation> CheckNoSignalling(
    const ConditionalDistribution<T>& dist, double tol = kDefaultTolerance);

// Largest |marginal difference| over all no-signalling relations.
template <typename T>
double MaxNoSignallingResidual(const ConditionalDistribution<T>& dist);

// Applies the same player transposition to types and actions of a
// distribution: q(y|x) = p(swap y | swap x).
template <typename T>
ConditionalDistribution<T> SwapPlayers(const ConditionalDistribution<T>& dist,
                                       Player p, Player q);

}  // namespace qgame

#endif  // QGAME_GAME_H_
