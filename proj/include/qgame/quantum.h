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

#ifndef QGAME_QUANTUM_H_
#define QGAME_QUANTUM_H_

// Quantum advisor: a tripartite state shared before the types arrive, and
// per-player two-outcome projective measurements selected by type.
//
// Conventions: outcome y = 1 is eigenvalue +1 and y = 0 is eigenvalue -1;
// basis |b_A b_B b_C> is indexed 4*b_A + 2*b_B + b_C (tensor order A, B, C)
// with |0> = (1, 0).

#include <array>
#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "qgame/classical.h"
#include "qgame/game.h"

namespace qgame {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix8 = Eigen::Matrix<Complex, 8, 8>;
using Vector8 = Eigen::Matrix<Complex, 8, 1>;

inline constexpr double kAlgebraTolerance = 1e-12;

// Unit Bloch vector n = (sin t cos f, sin t sin f, cos t); the observable is
// n . sigma.
struct BlochObservable {
  double theta = 0.0;
  double phi = 0.0;

  // Equivalent angles with theta in [0, pi] and phi in (-pi, pi].
  BlochObservable Normalized() const;

  friend bool operator==(const BlochObservable&,
                         const BlochObservable&) = default;
};

Matrix2 PauliX();
Matrix2 PauliY();
Matrix2 PauliZ();

Matrix2 ObservableMatrix(const BlochObservable& obs);

struct ProjectorPair {
  Matrix2 p0;  // (I - M) / 2, outcome 0
  Matrix2 p1;  // (I + M) / 2, outcome 1

  const Matrix2& operator[](int outcome) const {
    return outcome == 0 ? p0 : p1;
  }
};

ProjectorPair Projectors(const BlochObservable& obs);

// Wraps an angle into (-pi, pi].
double WrapAngle(double angle);

// Azimuths of the six equatorial observables: (phi1, phi2) for A's types
// 0 and 1, (phi3, phi4) for B and (phi5, phi6) for C.
struct PlanarAngles {
  std::array<double, 6> phi{};

  // Copy with every angle wrapped into (-pi, pi].
  PlanarAngles Normalized() const;

  double& operator[](int i) { return phi[i]; }
  double operator[](int i) const { return phi[i]; }

  friend bool operator==(const PlanarAngles&, const PlanarAngles&) = default;
};

// Six observables: observables[player][type].
struct MeasurementSetting {
  std::array<std::array<BlochObservable, 2>, kNumPlayers> observables{};

  BlochObservable& operator()(Player p, int type) {
    return observables[PlayerIndex(p)][type];
  }
  const BlochObservable& operator()(Player p, int type) const {
    return observables[PlayerIndex(p)][type];
  }

  static MeasurementSetting Planar(const PlanarAngles& angles);
  // Every observable set to the same Bloch direction.
  static MeasurementSetting Uniform(const BlochObservable& obs);

  bool IsPlanar(double tol = kAlgebraTolerance) const;
  // Only meaningful when IsPlanar().
  PlanarAngles Azimuths() const;
};

// Tripartite density operator. Construction validates Hermiticity, unit
// trace and positivity.
class QuantumAdvisor {
 public:
  // Throws ValidationError with the offending trace or eigenvalue.
  explicit QuantumAdvisor(const Matrix8& rho);

  // |Psi><Psi| with |Psi> = (|111> + i|000>) / sqrt(2).
  static QuantumAdvisor Ghz();
  static QuantumAdvisor MaximallyMixed();
  static Vector8 GhzVector();

  const Matrix8& rho() const { return rho_; }

 private:
  Matrix8 rho_;
};

// p(y|x) = Tr(rho A_{x_A}^{y_A} (x) B_{x_B}^{y_B} (x) C_{x_C}^{y_C}).
RealDistribution QuantumDistribution(const QuantumAdvisor& advisor,
                                     const MeasurementSetting& setting);

PayoffTriple<double> QuantumPayoffs(const UtilityTable& game,
                                    const Prior& prior,
                                    const QuantumAdvisor& advisor,
                                    const MeasurementSetting& setting);

// Closed-form payoff of the bundled game with the GHZ advisor, uniform
// prior and equatorial observables; all three players receive it.
double PlanarPayoff(const PlanarAngles& angles);

// phi1,2 += chi1; phi3,4 += chi2; phi5,6 += chi3. The GHZ advisor makes
// this a symmetry when chi1 + chi2 + chi3 is a multiple of 2 pi; any other
// shift is rejected with ValidationError.
PlanarAngles GaugeTransform(const PlanarAngles& angles, double chi1,
                            double chi2, double chi3);

// The gauge representative with phi1 = phi3 = 0.
PlanarAngles GaugeCanonicalize(const PlanarAngles& angles);

// Componentwise distance of two angle tuples modulo 2 pi.
double AngleDistance(const PlanarAngles& a, const PlanarAngles& b);

bool GaugeEquivalent(const PlanarAngles& a, const PlanarAngles& b,
                     double tol);

// <GHZ| projector on `party` (identity elsewhere) |GHZ>. Always 1/2: each
// party's reduced state is maximally mixed, so no measurement gives a
// player a deterministic outcome. Throws ValidationError unless the input
// is a rank-1 Hermitian projector.
double GhzSinglePartyMarginal(const Matrix2& projector, Player party);

double QuantumBell(const QuantumAdvisor& advisor,
                   const MeasurementSetting& setting, BellVariant variant);

}  // namespace qgame

#endif  // QGAME_QUANTUM_H_
