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

#include "qgame/optimizer.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "qgame/classical.h"
#include "qgame/nelder_mead.h"
#include "qgame/table1.h"

namespace qgame {
namespace {

constexpr double kPi = std::numbers::pi;
// Canonical angle tuples closer than this are reported as one maximum.
constexpr double kDistinctMaximumSeparation = 1e-4;
// Maxima whose values differ by less than this are ties; the
// lexicographically smallest canonical angles win.
constexpr double kValueTieTolerance = 1e-12;

using Objective = std::function<double(std::span<const double>)>;

struct Range {
  double lo;
  double hi;
};

struct StartResult {
  std::vector<double> point;
  double value = 0.0;
  bool converged = false;
};

double UnitUniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Coarse grid scan, then Nelder-Mead from `extra_starts` followed by the
// best `config.restarts` grid points, each jittered within its cell. The
// jitter of the i-th grid start depends only on the seed and i, so a larger
// restart count only adds starts.
std::vector<StartResult> MultiStartMaximize(
    const Objective& objective, const std::vector<Range>& ranges,
    const OptimizationConfig& config,
    const std::vector<std::vector<double>>& extra_starts = {}) {
  const std::size_t dim = ranges.size();
  std::vector<double> cell(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    cell[k] = (ranges[k].hi - ranges[k].lo) / config.grid;
  }
  auto grid_point = [&](std::size_t index) {
    std::vector<double> point(dim);
    for (std::size_t k = dim; k-- > 0;) {
      const auto coordinate = index % static_cast<std::size_t>(config.grid);
      index /= static_cast<std::size_t>(config.grid);
      point[k] = ranges[k].lo + (static_cast<double>(coordinate) + 0.5) * cell[k];
    }
    return point;
  };

  std::size_t total = 1;
  for (std::size_t k = 0; k < dim; ++k) total *= config.grid;
  std::vector<std::pair<double, std::size_t>> scan(total);
  for (std::size_t i = 0; i < total; ++i) {
    scan[i] = {objective(grid_point(i)), i};
  }
  const std::size_t keep =
      std::min(total, static_cast<std::size_t>(config.restarts));
  std::partial_sort(scan.begin(), scan.begin() + keep, scan.end(),
                    [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first
                                                : a.second < b.second;
                    });

  std::vector<std::vector<double>> starts = extra_starts;
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < keep; ++i) {
    std::vector<double> point = grid_point(scan[i].second);
    for (std::size_t k = 0; k < dim; ++k) {
      point[k] += (UnitUniform(rng) - 0.5) * cell[k];
    }
    starts.push_back(std::move(point));
  }

  NelderMeadOptions options;
  options.value_tolerance = config.tolerance;
  options.max_iterations = config.max_iterations;
  const double step = 0.5 * *std::min_element(cell.begin(), cell.end());
  auto negated = [&](std::span<const double> p) { return -objective(p); };

  std::vector<StartResult> results;
  for (const auto& start : starts) {
    const NelderMeadResult r = NelderMeadMinimize(negated, start, step, options);
    results.push_back({r.point, -r.value, r.converged});
  }
  return results;
}

PlanarAngles FromReduced(std::span<const double> p) {
  return PlanarAngles{{0.0, p[0], 0.0, p[1], p[2], p[3]}};
}

bool BetterMaximum(const LocalMaximum& a, const LocalMaximum& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.angles.phi < b.angles.phi;
}

// The lexicographically smallest angles among maxima tied with the top one.
const LocalMaximum& SelectBest(const std::vector<LocalMaximum>& sorted) {
  const LocalMaximum* best = &sorted.front();
  for (const auto& m : sorted) {
    if (m.value < sorted.front().value - kValueTieTolerance) break;
    if (m.angles.phi < best->angles.phi) best = &m;
  }
  return *best;
}

OptimumReport SearchPlanar(const std::function<double(const PlanarAngles&)>& f,
                           const UtilityTable& game, const Prior& prior,
                           const OptimizationConfig& config) {
  config.Validate();
  const std::vector<Range> ranges(4, Range{-kPi, kPi});
  const auto runs = MultiStartMaximize(
      [&](std::span<const double> p) { return f(FromReduced(p)); }, ranges,
      config);

  std::vector<LocalMaximum> maxima;
  for (const auto& run : runs) {
    maxima.push_back(
        {GaugeCanonicalize(FromReduced(run.point)), run.value, run.converged});
  }
  std::sort(maxima.begin(), maxima.end(), BetterMaximum);

  OptimumReport report;
  const LocalMaximum& best = SelectBest(maxima);
  report.angles = best.angles;
  report.value = best.value;
  report.converged = best.converged;
  for (const auto& m : maxima) {
    const bool seen = std::any_of(
        report.local_maxima.begin(), report.local_maxima.end(),
        [&](const LocalMaximum& other) {
          return AngleDistance(other.angles, m.angles) <
                 kDistinctMaximumSeparation;
        });
    if (!seen) report.local_maxima.push_back(m);
  }

  const QuantumAdvisor ghz = QuantumAdvisor::Ghz();
  const MeasurementSetting setting = MeasurementSetting::Planar(report.angles);
  report.payoffs = QuantumPayoffs(game, prior, ghz, setting);
  report.bell_values = {QuantumBell(ghz, setting, BellVariant::kV011),
                        QuantumBell(ghz, setting, BellVariant::kV100)};
  return report;
}

MeasurementSetting WithPlayerParameters(const MeasurementSetting& base,
                                        Player p, SearchMode mode,
                                        std::span<const double> params) {
  MeasurementSetting setting = base;
  for (int type = 0; type < 2; ++type) {
    if (mode == SearchMode::kPlanar) {
      setting(p, type) = {kPi / 2.0, params[type]};
    } else {
      setting(p, type) = {params[2 * type], params[2 * type + 1]};
    }
  }
  return setting;
}

}  // namespace

void OptimizationConfig::Validate() const {
  if (restarts < 1) throw ValidationError("restarts must be at least 1");
  if (grid < 8) throw ValidationError("grid resolution must be at least 8");
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  if (max_iterations < 1) {
    throw ValidationError("max_iterations must be at least 1");
  }
}

OptimumReport MaximizePlanar(const OptimizationConfig& config) {
  return SearchPlanar(PlanarPayoff, Table1Game(), Prior::Uniform(), config);
}

OptimumReport MaximizeFairPlanar(const UtilityTable& game, const Prior& prior,
                                 const OptimizationConfig& config) {
  const QuantumAdvisor ghz = QuantumAdvisor::Ghz();
  auto fair_value = [&](const PlanarAngles& angles) {
    const auto payoffs =
        QuantumPayoffs(game, prior, ghz, MeasurementSetting::Planar(angles));
    return std::min({payoffs.values[0], payoffs.values[1], payoffs.values[2]});
  };
  return SearchPlanar(fair_value, game, prior, config);
}

std::string SearchModeName(SearchMode mode) {
  return mode == SearchMode::kPlanar ? "planar" : "full_sphere";
}

SearchMode ParseSearchMode(std::string_view name) {
  if (name == "planar") return SearchMode::kPlanar;
  if (name == "full" || name == "full_sphere") return SearchMode::kFullSphere;
  throw std::invalid_argument("unknown search mode \"" + std::string(name) +
                              "\"");
}

BestResponseVerdict BestResponseCheck(const UtilityTable& game,
                                      const Prior& prior,
                                      const QuantumAdvisor& advisor,
                                      const MeasurementSetting& candidate,
                                      SearchMode mode,
                                      const OptimizationConfig& config) {
  config.Validate();
  const PayoffTriple<double> current =
      QuantumPayoffs(game, prior, advisor, candidate);

  std::vector<Range> ranges;
  if (mode == SearchMode::kPlanar) {
    ranges = {{-kPi, kPi}, {-kPi, kPi}};
  } else {
    ranges = {{0.0, kPi}, {-kPi, kPi}, {0.0, kPi}, {-kPi, kPi}};
  }

  BestResponseVerdict verdict;
  verdict.mode = mode;
  for (Player p : kPlayers) {
    std::vector<double> own;
    for (int type = 0; type < 2; ++type) {
      if (mode == SearchMode::kPlanar) {
        own.push_back(candidate(p, type).phi);
      } else {
        own.push_back(candidate(p, type).theta);
        own.push_back(candidate(p, type).phi);
      }
    }
    auto payoff = [&](std::span<const double> params) {
      return QuantumPayoffs(game, prior, advisor,
                            WithPlayerParameters(candidate, p, mode, params))[p];
    };
    const auto runs = MultiStartMaximize(payoff, ranges, config, {own});
    const auto best = std::max_element(
        runs.begin(), runs.end(),
        [](const auto& a, const auto& b) { return a.value < b.value; });

    PlayerDeviation& d = verdict.players[PlayerIndex(p)];
    d.player = p;
    d.current_payoff = current[p];
    d.best_payoff = best->value;
    d.improvement = best->value - current[p];
    const MeasurementSetting deviated =
        WithPlayerParameters(candidate, p, mode, best->point);
    d.deviation = {deviated(p, 0).Normalized(), deviated(p, 1).Normalized()};
    verdict.max_improvement = std::max(verdict.max_improvement, d.improvement);
  }
  verdict.certified = verdict.max_improvement < kEquilibriumThreshold;
  return verdict;
}

BestResponseVerdict BestResponseCheck(const MeasurementSetting& candidate,
                                      SearchMode mode,
                                      const OptimizationConfig& config) {
  return BestResponseCheck(Table1Game(), Prior::Uniform(),
                           QuantumAdvisor::Ghz(), candidate, mode, config);
}

AdvantageReport QuantumAdvantageReport(const UtilityTable& game,
                                       const Prior& prior,
                                       const OptimizationConfig& config) {
  AdvantageReport report;
  report.classical_bound = ClassicalTotalBound(game, prior);
  report.classical_fair_cap = report.classical_bound / kNumPlayers;
  report.quantum = MaximizeFairPlanar(game, prior, config);
  report.quantum_total = report.quantum.payoffs.Total();
  report.advantage = report.quantum.value - ToDouble(report.classical_fair_cap);
  report.quantum_beats_classical = report.advantage > kDefaultTolerance;
  return report;
}

}  // namespace qgame
