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

#include "qgame/commands.h"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

#include <openssl/evp.h>

#include "qgame/classical.h"
#include "qgame/io.h"
#include "qgame/table1.h"

namespace qgame {
namespace {

using nlohmann::json;

double Real(double value) { return RoundSignificant(value, 12); }

json PlayerMap(const std::function<json(Player)>& value) {
  json out = json::object();
  for (Player p : kPlayers) out[std::string(1, PlayerName(p))] = value(p);
  return out;
}

json ToJson(const PayoffTriple<Rational>& payoffs) {
  return PlayerMap([&](Player p) { return FormatRational(payoffs[p]); });
}

json ToJson(const PayoffTriple<double>& payoffs) {
  return PlayerMap([&](Player p) { return Real(payoffs[p]); });
}

json ToJson(const DeterministicStrategyProfile& profile) {
  return PlayerMap([&](Player p) { return profile[p].ToString(); });
}

json ToJson(const PlanarAngles& angles) {
  json out = json::array();
  for (double phi : angles.phi) out.push_back(Real(phi));
  return out;
}

json ToJson(const BlochObservable& obs) {
  return {{"theta", Real(obs.theta)}, {"phi", Real(obs.phi)}};
}

json ToJson(const OptimumReport& report) {
  json maxima = json::array();
  for (const auto& m : report.local_maxima) {
    maxima.push_back({{"angles", ToJson(m.angles)},
                      {"value", Real(m.value)},
                      {"converged", m.converged}});
  }
  return {{"angles", ToJson(report.angles)},
          {"value", Real(report.value)},
          {"payoffs", ToJson(report.payoffs)},
          {"bell_values",
           {{"V011", Real(report.bell_values[0])},
            {"V100", Real(report.bell_values[1])}}},
          {"converged", report.converged},
          {"local_maxima", maxima}};
}

json ToJson(const BestResponseVerdict& verdict) {
  json players = json::object();
  for (const auto& d : verdict.players) {
    players[std::string(1, PlayerName(d.player))] = {
        {"current_payoff", Real(d.current_payoff)},
        {"best_payoff", Real(d.best_payoff)},
        {"improvement", Real(d.improvement)},
        {"deviation", {ToJson(d.deviation[0]), ToJson(d.deviation[1])}}};
  }
  return {{"mode", SearchModeName(verdict.mode)},
          {"players", players},
          {"max_improvement", Real(verdict.max_improvement)},
          {"threshold", kEquilibriumThreshold},
          {"certified", verdict.certified}};
}

json ToJson(const RealDistribution& dist) {
  json rows = json::object();
  for (TypeProfile x : AllProfiles<TypeProfile>()) {
    json row = json::object();
    for (ActionProfile y : AllProfiles<ActionProfile>()) {
      row[y.ToString()] = Real(dist(y, x));
    }
    rows[x.ToString()] = row;
  }
  return rows;
}

json ConfigJson(const OptimizationConfig& config) {
  return {{"restarts", config.restarts},
          {"grid", config.grid},
          {"tol", config.tolerance},
          {"max_iterations", config.max_iterations},
          {"seed", config.seed}};
}

// Common envelope. The digest covers the canonical game document plus any
// extra inputs (setting, seeds, config).
class Report {
 public:
  Report(std::string command, const CommandOptions& options)
      : command_(std::move(command)),
        options_(options),
        start_(std::chrono::steady_clock::now()),
        game_(ResolveGame(options.game)) {
    symmetry_violations_ = CheckPlayerSymmetry(game_.utilities).size();
    if (symmetry_violations_ > 0) {
      warnings_.push_back("game is not symmetric under player permutations (" +
                          std::to_string(symmetry_violations_) +
                          " violated relations)");
      std::fprintf(stderr, "warning: %s\n", warnings_.back().c_str());
    }
  }

  const GameDefinition& game() const { return game_; }
  std::size_t symmetry_violations() const { return symmetry_violations_; }

  json Finish(json inputs, json results) const {
    json game_doc = GameToJson(game_.utilities, game_.prior);
    inputs["game"] = options_.game;
    json digest_input = {{"game", game_doc}, {"inputs", inputs}};
    json report = {
        {"command", command_},
        {"engine_version", kEngineVersion},
        {"inputs", inputs},
        {"inputs_digest", "sha256:" + Sha256Hex(digest_input.dump())},
        {"warnings", warnings_},
        {"results", std::move(results)}};
    if (options_.timing) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      report["wall_time_s"] = Real(elapsed.count());
    }
    return report;
  }

 private:
  std::string command_;
  CommandOptions options_;
  std::chrono::steady_clock::time_point start_;
  GameDefinition game_;
  std::size_t symmetry_violations_ = 0;
  std::vector<std::string> warnings_;
};

json ErrorReport(const std::string& command, const std::string& kind,
                 const std::string& message) {
  return {{"command", command},
          {"engine_version", kEngineVersion},
          {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 15];
  }
  return hex;
}

GameDefinition ResolveGame(const std::string& source) {
  if (source == kBuiltinTable1) return {Table1Game(), Prior::Uniform()};
  if (source.rfind("builtin:", 0) == 0) {
    throw ValidationError("unknown builtin game \"" + source + "\"");
  }
  return LoadGameFile(source);
}

CommandResult RunEquilibria(const CommandOptions& options) {
  Report report("equilibria", options);
  const auto& [game, prior] = report.game();
  const auto equilibria = EnumerateDeterministicEquilibria(game, prior);

  json list = json::array();
  for (const auto& eq : equilibria) {
    const ExactDistribution dist = StrategyToDistribution(eq.profile);
    list.push_back(
        {{"profile", ToJson(eq.profile)},
         {"payoffs", ToJson(eq.payoffs)},
         {"total", FormatRational(eq.payoffs.Total())},
         {"fair", eq.fair},
         {"saturates_bound", eq.saturates_bound},
         {"bell_values",
          {{"V011", FormatRational(BellExpression(dist, BellVariant::kV011))},
           {"V100",
            FormatRational(BellExpression(dist, BellVariant::kV100))}}}});
  }
  json results = {
      {"count", equilibria.size()},
      {"classical_bound", FormatRational(ClassicalTotalBound(game, prior))},
      {"symmetric", report.symmetry_violations() == 0},
      {"equilibria", list}};
  return {kExitSuccess, report.Finish(json::object(), std::move(results))};
}

CommandResult RunAudit(const CommandOptions& options) {
  if (options.samples < 0) throw ValidationError("samples must be >= 0");
  Report report("audit-bound", options);
  const auto& [game, prior] = report.game();
  const AuditReport audit =
      ClassicalBoundAudit(game, prior, options.samples, options.seed);

  json maximizers = json::array();
  for (const auto& profile : audit.maximizers) {
    const NashVerdict verdict = IsNash(game, prior, profile);
    maximizers.push_back(
        {{"profile", ToJson(profile)}, {"is_nash", verdict.is_nash}});
  }
  json results = {
      {"bound", FormatRational(audit.bound)},
      {"deterministic",
       {{"max_total", FormatRational(audit.deterministic_max_total)},
        {"within_bound", audit.deterministic_within_bound},
        {"maximizers", maximizers},
        {"bell_max_abs",
         {{"V011", FormatRational(audit.deterministic_bell_max[0])},
          {"V100", FormatRational(audit.deterministic_bell_max[1])}}}}},
      {"sampled",
       {{"samples", audit.samples},
        {"seed", audit.seed},
        {"max_total", audit.samples > 0
                          ? json(FormatRational(audit.sampled_max_total))
                          : json(nullptr)},
        {"within_bound", audit.samples_within_bound},
        {"fair_samples", audit.fair_samples},
        {"fair_cap", FormatRational(audit.bound / kNumPlayers)},
        {"fair_cap_holds", audit.fair_cap_holds},
        {"bell_max_abs",
         {{"V011", FormatRational(audit.sampled_bell_max[0])},
          {"V100", FormatRational(audit.sampled_bell_max[1])}}}}}};
  json inputs = {{"samples", options.samples}, {"seed", options.seed}};
  return {kExitSuccess, report.Finish(std::move(inputs), std::move(results))};
}

CommandResult RunBell(const CommandOptions& options) {
  Report report("bell", options);
  json profiles = json::array();
  std::array<Rational, 8> relabeled_max{};
  for (const auto& profile : AllStrategyProfiles()) {
    const ExactDistribution dist = StrategyToDistribution(profile);
    for (int mask = 0; mask < 8; ++mask) {
      relabeled_max[mask] =
          std::max(relabeled_max[mask], Abs(RelabeledBellExpression(dist, mask)));
    }
    profiles.push_back(
        {{"profile", ToJson(profile)},
         {"V011", FormatRational(BellExpression(dist, BellVariant::kV011))},
         {"V100", FormatRational(BellExpression(dist, BellVariant::kV100))}});
  }
  json relabeled = json::object();
  for (int mask = 0; mask < 8; ++mask) {
    relabeled[TypeProfile::FromIndex(mask).ToString()] =
        FormatRational(relabeled_max[mask]);
  }
  json results = {{"local_bound", "2/1"},
                  {"deterministic", profiles},
                  {"deterministic_max_abs_by_relabeling", relabeled}};
  json inputs = json::object();
  if (options.setting) {
    const MeasurementSetting setting = LoadSettingFile(*options.setting);
    const QuantumAdvisor ghz = QuantumAdvisor::Ghz();
    const RealDistribution dist = QuantumDistribution(ghz, setting);
    json by_mask = json::object();
    for (int mask = 0; mask < 8; ++mask) {
      by_mask[TypeProfile::FromIndex(mask).ToString()] =
          Real(RelabeledBellExpression(dist, mask));
    }
    results["quantum"] = {
        {"V011", Real(BellExpression(dist, BellVariant::kV011))},
        {"V100", Real(BellExpression(dist, BellVariant::kV100))},
        {"by_relabeling", by_mask}};
    inputs["setting"] = SettingToJson(setting);
  }
  return {kExitSuccess, report.Finish(std::move(inputs), std::move(results))};
}

CommandResult RunOptimize(const CommandOptions& options) {
  options.optimizer.Validate();
  Report report("optimize", options);
  const auto& [game, prior] = report.game();
  const AdvantageReport advantage =
      QuantumAdvantageReport(game, prior, options.optimizer);

  json results = {
      {"optimum", ToJson(advantage.quantum)},
      {"classical_bound", FormatRational(advantage.classical_bound)},
      {"classical_fair_cap", FormatRational(advantage.classical_fair_cap)},
      {"quantum_value", Real(advantage.quantum.value)},
      {"quantum_total", Real(advantage.quantum_total)},
      {"advantage", Real(advantage.advantage)},
      {"quantum_beats_classical", advantage.quantum_beats_classical}};
  const int code = advantage.quantum.converged ? kExitSuccess
                                               : kExitNonConvergence;
  return {code, report.Finish({{"config", ConfigJson(options.optimizer)}},
                              std::move(results))};
}

CommandResult RunCheck(const CommandOptions& options) {
  if (!options.setting) throw ValidationError("check requires --setting");
  options.optimizer.Validate();
  Report report("check", options);
  const auto& [game, prior] = report.game();
  const MeasurementSetting setting = LoadSettingFile(*options.setting);
  const QuantumAdvisor ghz = QuantumAdvisor::Ghz();
  const RealDistribution dist = QuantumDistribution(ghz, setting);

  json violations = json::array();
  for (const auto& v : CheckNoSignalling(dist, kAlgebraTolerance)) {
    violations.push_back({{"varied_player", std::string(1, PlayerName(v.varied))},
                          {"context", v.context.ToString()},
                          {"others", v.others.ToString()},
                          {"residual", Real(v.residual)}});
  }
  const PayoffTriple<double> payoffs = ExpectedPayoffs(game, prior, dist);
  const bool planar = setting.IsPlanar();
  const BestResponseVerdict verdict = BestResponseCheck(
      game, prior, ghz, setting, options.mode, options.optimizer);

  json results = {
      {"planar", planar},
      {"distribution", ToJson(dist)},
      {"no_signalling",
       {{"max_residual", Real(MaxNoSignallingResidual(dist))},
        {"tolerance", kAlgebraTolerance},
        {"violations", violations}}},
      {"bell_values",
       {{"V011", Real(BellExpression(dist, BellVariant::kV011))},
        {"V100", Real(BellExpression(dist, BellVariant::kV100))}}},
      {"payoffs", ToJson(payoffs)},
      {"best_response", ToJson(verdict)}};
  if (planar && options.game == kBuiltinTable1) {
    results["closed_form_payoff"] = Real(PlanarPayoff(setting.Azimuths()));
  }
  json inputs = {{"setting", SettingToJson(setting)},
                 {"config", ConfigJson(options.optimizer)}};
  return {kExitSuccess, report.Finish(std::move(inputs), std::move(results))};
}

CommandResult Execute(const std::string& command,
                      const CommandOptions& options) {
  static const std::map<std::string,
                        std::function<CommandResult(const CommandOptions&)>>
      kCommands = {{"equilibria", RunEquilibria},
                   {"audit-bound", RunAudit},
                   {"bell", RunBell},
                   {"optimize", RunOptimize},
                   {"check", RunCheck}};
  const auto it = kCommands.find(command);
  if (it == kCommands.end()) {
    return {kExitValidation,
            ErrorReport(command, "usage", "unknown command " + command)};
  }
  try {
    return it->second(options);
  } catch (const IoError& e) {
    return {kExitIo, ErrorReport(command, "io", e.what())};
  } catch (const ValidationError& e) {
    return {kExitValidation, ErrorReport(command, "validation", e.what())};
  } catch (const std::invalid_argument& e) {
    return {kExitValidation, ErrorReport(command, "validation", e.what())};
  }
}

}  // namespace qgame
