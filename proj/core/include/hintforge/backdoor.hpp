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

#include <span>
#include <string>
#include <vector>

#include "hintforge/sat.hpp"
#include "hintforge/trace.hpp"

namespace hintforge {

/// Fraction of clauses that are non-Horn and contain variable `var`
/// (0-based) positively. Throws on an empty formula.
double salience(const CnfFormula& f, int var);

/// Salience of every variable in one pass over the clauses.
std::vector<double> salienceVector(const CnfFormula& f);

struct SalienceProfile {
  std::vector<double> sigmaHat;  // per variable, in [0, 1]
  int m = 0;                     // number of formulas averaged
};

SalienceProfile estimateSalience(std::span<const CnfFormula> sample);

/// Indices of the k largest scores; ties go to the smaller index. Sorted.
std::vector<int> topK(std::span<const double> scores, int k);

/// Top-k variables by mean salience over a sample sharing one variable count.
std::vector<int> recoverBackdoor(std::span<const CnfFormula> sample, int k);

/// Enumerate-the-backdoor solver: Horn-SAT on Horn residuals, DPLL otherwise.
struct CompiledBackdoorSolver {
  std::vector<int> backdoor;  // distinct 0-based variables
  std::string baseSolver = "dpll";

  /// Validates distinctness and range against `numVars`.
  void validate(int numVars) const;
};

struct BackdoorSolveResult {
  SatResult result;
  DiagnosticTrace trace;
  int branchesTried = 0;
};

/// Largest backdoor solveWithBackdoor will enumerate (2^20 branches).
inline constexpr int kMaxEnumeratedBackdoor = 20;

/// Always returns the same verdict as dpll(f), whatever the backdoor.
/// Branches over the backdoor in lexicographic order (all-false first) and
/// stops at the first satisfiable residual.
BackdoorSolveResult solveWithBackdoor(const CompiledBackdoorSolver& solver,
                                      const CnfFormula& f);

/// rho * (1/k - 1/(d-k)); requires 2k < d.
double backdoorMargin(int d, int k, double rho);

/// ceil(8 / margin^2 * ln(2d / delta)) formulas suffice to recover the
/// planted backdoor with probability at least 1 - delta.
int backdoorSampleSize(int d, int k, double rho, double delta);

}  // namespace hintforge
