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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hintforge/instance.hpp"
#include "hintforge/oracles.hpp"
#include "hintforge/trace.hpp"
#include "hintforge/verify.hpp"

namespace hintforge {

struct SolveOutput {
  Solution solution;
  DiagnosticTrace trace;
};

/// Solvers see only the public part of an instance.
using SolveFn = std::function<SolveOutput(const PublicInstance&, std::uint64_t seed)>;

struct MeasuredSolver {
  std::string id;
  ProblemClass problemClass = ProblemClass::kColoring;
  SolveFn solve;
  /// Prior weight pi(c) in (0, 1].
  double prior = 1.0;
  /// Budget knobs, echoed into reports.
  nlohmann::json config = nlohmann::json::object();
};

struct RunMeasurement {
  double wallClockMs = 0;
  ScoredResult scored;
  DiagnosticTrace trace;
  bool crashed = false;
  std::string error;
  std::optional<Solution> solution;
};

/// Milliseconds on some monotonic clock.
using ClockMs = std::function<double()>;

double steadyNowMs();

struct RunOptions {
  /// Runtime charged to a crashed solve.
  double failureRuntimeMs = 10'000;
  /// Solver-local seed.
  std::uint64_t seed = 0;
  /// Defaults to the steady clock.
  ClockMs clock;
  bool keepSolution = false;
};

/// Times one solve of the public part and scores it. Solver exceptions are
/// caught and turned into a zero-quality run at the failure runtime.
RunMeasurement runMeasured(const MeasuredSolver& solver, const Instance& inst,
                           const RunOptions& options = {});

/// Seed for one (dataset, solver, instance) triple.
std::uint64_t solverSeed(std::uint64_t datasetSeed, std::string_view solverId,
                         std::string_view instanceId);

/// Heuristic baselines for a class; priors are uniform over the list.
std::vector<MeasuredSolver> catalog(ProblemClass c);

/// Exact solver wrapping the in-repo oracles (desk scale only).
MeasuredSolver exactSolver(ProblemClass c, const OracleBudget& budget = {});

/// Catalog entry or "exact"; throws kNotFound otherwise.
MeasuredSolver findSolver(ProblemClass c, std::string_view id);

/// All registered solver ids for a class, catalog order, then "exact".
std::vector<std::string> solverIds(ProblemClass c);

/// Multi-start 2-opt with explicit budgets.
MeasuredSolver twoOptSolver(int starts, int maxPasses);

/// Sets priors to 1/|library|.
void assignUniformPriors(std::vector<MeasuredSolver>& library);

}  // namespace hintforge
