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

#include "qgame/quantum.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace qgame {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string Describe(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

// Tr(rho (a (x) b (x) c)) with the tensor product expanded by index.
double TraceWithProduct(const Matrix8& rho, const Matrix2& a, const Matrix2& b,
                        const Matrix2& c) {
  Complex sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    const int ia = (i >> 2) & 1, ib = (i >> 1) & 1, ic = i & 1;
    for (int j = 0; j < 8; ++j) {
      const int ja = (j >> 2) & 1, jb = (j >> 1) & 1, jc = j & 1;
      sum += rho(j, i) * a(ia, ja) * b(ib, jb) * c(ic, jc);
    }
  }
  return sum.real();
}

}  // namespace

double WrapAngle(double angle) {
  double wrapped = std::remainder(angle, kTwoPi);
  if (wrapped <= -kPi) wrapped += kTwoPi;
  return wrapped;
}

BlochObservable BlochObservable::Normalized() const {
  double t = WrapAngle(theta);
  double f = phi;
  if (t < 0.0) {
    t = -t;
    f += kPi;
  }
  return {t, WrapAngle(f)};
}

Matrix2 PauliX() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix2 PauliY() {
  Matrix2 m;
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

Matrix2 PauliZ() {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix2 ObservableMatrix(const BlochObservable& obs) {
  const double nx = std::sin(obs.theta) * std::cos(obs.phi);
  const double ny = std::sin(obs.theta) * std::sin(obs.phi);
  const double nz = std::cos(obs.theta);
  Matrix2 m;
  m << nz, Complex(nx, -ny), Complex(nx, ny), -nz;
  return m;
}

ProjectorPair Projectors(const BlochObservable& obs) {
  const Matrix2 m = ObservableMatrix(obs);
  const Matrix2 id = Matrix2::Identity();
  return {(id - m) / 2.0, (id + m) / 2.0};
}

PlanarAngles PlanarAngles::Normalized() const {
  PlanarAngles out;
  for (int i = 0; i < 6; ++i) out.phi[i] = WrapAngle(phi[i]);
  return out;
}

MeasurementSetting MeasurementSetting::Planar(const PlanarAngles& angles) {
  MeasurementSetting setting;
  for (Player p : kPlayers) {
    for (int type = 0; type < 2; ++type) {
      setting(p, type) = {kPi / 2.0, angles[2 * PlayerIndex(p) + type]};
    }
  }
  return setting;
}

MeasurementSetting MeasurementSetting::Uniform(const BlochObservable& obs) {
  MeasurementSetting setting;
  for (auto& pair : setting.observables) pair = {obs, obs};
  return setting;
}

bool MeasurementSetting::IsPlanar(double tol) const {
  for (const auto& pair : observables) {
    for (const auto& obs : pair) {
      if (std::abs(obs.Normalized().theta - kPi / 2.0) > tol) return false;
    }
  }
  return true;
}

PlanarAngles MeasurementSetting::Azimuths() const {
  PlanarAngles angles;
  for (Player p : kPlayers) {
    for (int type = 0; type < 2; ++type) {
      angles[2 * PlayerIndex(p) + type] = (*this)(p, type).Normalized().phi;
    }
  }
  return angles;
}

QuantumAdvisor::QuantumAdvisor(const Matrix8& rho) : rho_(rho) {
  const double asymmetry = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > kAlgebraTolerance) {
    throw ValidationError("advisor density matrix is not Hermitian (max |rho - "
                          "rho^dagger| = " + Describe(asymmetry) + ")");
  }
  const Complex trace = rho_.trace();
  if (std::abs(trace - 1.0) > kAlgebraTolerance) {
    throw ValidationError("advisor density matrix has trace " +
                          Describe(trace.real()) + ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix8> solver(rho_,
                                                Eigen::EigenvaluesOnly);
  const double smallest = solver.eigenvalues().minCoeff();
  if (smallest < -kAlgebraTolerance) {
    throw ValidationError(
        "advisor density matrix is not positive semidefinite (eigenvalue " +
        Describe(smallest) + ")");
  }
}

Vector8 QuantumAdvisor::GhzVector() {
  Vector8 psi = Vector8::Zero();
  psi(7) = 1.0 / std::sqrt(2.0);
  psi(0) = Complex(0.0, 1.0 / std::sqrt(2.0));
  return psi;
}

QuantumAdvisor QuantumAdvisor::Ghz() {
  const Vector8 psi = GhzVector();
  return QuantumAdvisor(psi * psi.adjoint());
}

QuantumAdvisor QuantumAdvisor::MaximallyMixed() {
  return QuantumAdvisor(Matrix8::Identity() / 8.0);
}

RealDistribution QuantumDistribution(const QuantumAdvisor& advisor,
                                     const MeasurementSetting& setting) {
  std::array<std::array<ProjectorPair, 2>, kNumPlayers> projectors;
  for (Player p : kPlayers) {
    for (int type = 0; type < 2; ++type) {
      projectors[PlayerIndex(p)][type] = Projectors(setting(p, type));
    }
  }
  return RealDistribution([&](ActionProfile y, TypeProfile x) {
    return TraceWithProduct(advisor.rho(),
                            projectors[0][x[Player::kA]][y[Player::kA]],
                            projectors[1][x[Player::kB]][y[Player::kB]],
                            projectors[2][x[Player::kC]][y[Player::kC]]);
  });
}

PayoffTriple<double> QuantumPayoffs(const UtilityTable& game,
                                    const Prior& prior,
                                    const QuantumAdvisor& advisor,
                                    const MeasurementSetting& setting) {
  return ExpectedPayoffs(game, prior, QuantumDistribution(advisor, setting),
                         kAlgebraTolerance);
}

double PlanarPayoff(const PlanarAngles& a) {
  auto s = [&](int i, int j, int k) {
    return std::sin(a[i - 1] + a[j - 1] + a[k - 1]);
  };
  return (26.0 + 3.0 * s(1, 3, 5) + 2.0 * s(2, 3, 5) + 2.0 * s(1, 4, 5) -
          3.0 * s(2, 4, 5) + 2.0 * s(1, 3, 6) - 3.0 * s(2, 3, 6) -
          3.0 * s(1, 4, 6) - 2.0 * s(2, 4, 6)) /
         48.0;
}

PlanarAngles GaugeTransform(const PlanarAngles& angles, double chi1,
                            double chi2, double chi3) {
  const double excess = std::remainder(chi1 + chi2 + chi3, kTwoPi);
  if (std::abs(excess) > kAlgebraTolerance) {
    throw ValidationError("gauge shifts must sum to a multiple of 2 pi "
                          "(off by " + Describe(excess) + ")");
  }
  PlanarAngles out = angles;
  const std::array<double, 3> chi = {chi1, chi2, chi3};
  for (int i = 0; i < 6; ++i) out[i] += chi[i / 2];
  return out.Normalized();
}

PlanarAngles GaugeCanonicalize(const PlanarAngles& angles) {
  const double chi1 = -angles[0];
  const double chi2 = -angles[2];
  PlanarAngles out = angles;
  const std::array<double, 3> chi = {chi1, chi2, -(chi1 + chi2)};
  for (int i = 0; i < 6; ++i) out[i] += chi[i / 2];
  out = out.Normalized();
  out[0] = 0.0;
  out[2] = 0.0;
  return out;
}

double AngleDistance(const PlanarAngles& a, const PlanarAngles& b) {
  double worst = 0.0;
  for (int i = 0; i < 6; ++i) {
    worst = std::max(worst, std::abs(WrapAngle(a[i] - b[i])));
  }
  return worst;
}

bool GaugeEquivalent(const PlanarAngles& a, const PlanarAngles& b,
                     double tol) {
  return AngleDistance(GaugeCanonicalize(a), GaugeCanonicalize(b)) <= tol;
}

double GhzSinglePartyMarginal(const Matrix2& projector, Player party) {
  const double hermitian =
      (projector - projector.adjoint()).cwiseAbs().maxCoeff();
  const double idempotent =
      (projector * projector - projector).cwiseAbs().maxCoeff();
  const double trace_error = std::abs(projector.trace() - 1.0);
  if (hermitian > kAlgebraTolerance || idempotent > kAlgebraTolerance ||
      trace_error > kAlgebraTolerance) {
    throw ValidationError("input is not a rank-1 projector");
  }
  const Matrix2 id = Matrix2::Identity();
  const std::array<Matrix2, 3> factors = {
      party == Player::kA ? projector : id,
      party == Player::kB ? projector : id,
      party == Player::kC ? projector : id};
  const Vector8 psi = QuantumAdvisor::GhzVector();
  return TraceWithProduct(psi * psi.adjoint(), factors[0], factors[1],
                          factors[2]);
}

double QuantumBell(const QuantumAdvisor& advisor,
                   const MeasurementSetting& setting, BellVariant variant) {
  return BellExpression(QuantumDistribution(advisor, setting), variant);
}

}  // namespace qgame
