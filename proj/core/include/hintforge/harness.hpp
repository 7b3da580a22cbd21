// Copyright 2026 The Hintforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hintforge/solvers.hpp"

namespace hintforge {

/// Runtimes below this floor are raised to it before any ratio.
inline constexpr double kRuntimeFloorMs = 1e-6;

enum class SolverRole { kHeuristic, kMethod, kExact };
std::string_view toString(SolverRole r);

struct BenchTarget {
  std::string name;  // "<class>/<family>"
  ProblemClass problemClass = ProblemClass::kColoring;
  std::vector<Instance> test;
  std::vector<MeasuredSolver> heuristics;
  MeasuredSolver method;
  std::optional<MeasuredSolver> exact;
};

struct BenchConfig {
  int repeats = 10;
  double clipMs = 10'000;
  double failureRuntimeMs = 10'000;
  std::uint64_t seed = 0;
  ClockMs clock;
  /// 1 keeps timing runs serial.
  int threads = 1;

  void validate() const;
  nlohmann::json toJson() const;
};

/// One measured solve.
struct RunRecord {
  std::string target;
  std::string family;  // problem class name, for diagnostics rows
  std::string solverId;
  SolverRole role = SolverRole::kHeuristic;
  std::string instanceId;
  int repeat = 0;
  double quality = 0;
  bool feasible = false;
  bool optimal = false;
  double runtimeMs = 0;  // as measured
  bool crashed = false;
  DiagnosticTrace trace;
};

struct SolverSummary {
  std::string solverId;
  SolverRole role = SolverRole::kHeuristic;
  int runs = 0;
  double meanQuality = 0;
  double optimalityRate = 0;
  double feasibilityRate = 0;
  /// Heuristic runtimes are clipped per run before averaging.
  double meanRuntimeMs = 0;
  double rawMeanRuntimeMs = 0;
};

struct DiagnosticRates {
  int n = 0;
  double shortcutRate = 0;
  double fallbackRate = 0;
  double meanResidualSize = 0;
  double meanRepairIterations = 0;
};

struct TargetSummary {
  std::string name;
  std::string family;
  SolverSummary method;
  std::vector<SolverSummary> heuristics;
  std::optional<SolverSummary> exact;
  double avgHeuristicQuality = 0;
  double avgHeuristicRuntimeMs = 0;
  std::string bestHeuristicId;
  double deltaQAvg = 0;
  double deltaQBest = 0;
  double speedupVsBest = 0;  // T_best / T_method
  double speedupVsAvg = 0;   // T_avg / T_method
  std::optional<double> speedupVsExact;
};

struct TraceGroup {
  std::string family;
  std::string target;
  std::vector<DiagnosticTrace> traces;
};

struct DiagnosticsAggregate {
  std::map<std::string, DiagnosticRates> perTarget;
  std::map<std::string, DiagnosticRates> perFamily;
  DiagnosticRates overall;
};

/// Target rows average their traces; family rows average their targets; the
/// overall row averages all targets.
DiagnosticsAggregate aggregateDiagnostics(std::span<const TraceGroup> groups);

struct EvalAggregate {
  double meanQuality = 0;
  double meanOptimality = 0;
  double meanFeasibility = 0;
  double meanDeltaQAvg = 0;
  double meanDeltaQBest = 0;
  double geoMeanRuntimeMs = 0;
  double geoSpeedupVsBest = 0;
  double geoSpeedupVsAvg = 0;
  std::optional<double> geoSpeedupVsExact;  // over targets that have an exact baseline
};

struct EvalReport {
  nlohmann::json config;
  std::vector<TargetSummary> targets;
  EvalAggregate aggregate;
  DiagnosticsAggregate diagnostics;  // of the method's traces
  std::vector<RunRecord> records;
};

double arithmeticMean(std::span<const double> xs);
/// exp(mean of ln x); every x must be positive.
double geometricMean(std::span<const double> xs);

/// Rebuilds every summary from raw records; targets keep first-seen order.
EvalReport summarizeRecords(std::vector<RunRecord> records, const BenchConfig& cfg);

EvalReport runBenchmark(std::span<const BenchTarget> targets, const BenchConfig& cfg);

nlohmann::json toJson(const EvalReport& r, bool withRecords = true);
/// One row per target, mirroring the per-target results table.
std::string toCsv(const EvalReport& r);

struct PerturbationConfig {
  std::uint64_t seed = 0;
  double failureRuntimeMs = 10'000;
  ClockMs clock;
  /// Absolute tolerance for "quality changed".
  double qualityTolerance = 1e-12;
};

struct PerturbationReport {
  std::string target;
  std::string solverId;
  int n = 0;
  double qOrig = 0;
  double qPert = 0;
  double deltaQ = 0;
  double qualityChanged = 0;
  double optimalityChanged = 0;
  double feasibilityChanged = 0;
  double runtimeRatio = 0;  // geometric mean of t_pert / t_orig
};

/// Scores the solver on each instance and on a random vertex relabeling of it.
PerturbationReport runPerturbationAblation(const std::string& target,
                                           std::span<const Instance> test,
                                           const MeasuredSolver& solver,
                                           const PerturbationConfig& cfg);

nlohmann::json toJson(const PerturbationReport& r);

}  // namespace hintforge
