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
#include <vector>

#include "hintforge/instance.hpp"

namespace hintforge {

/// Absolute slack allowed on packing-LP capacity rows.
inline constexpr double kLpFeasibilityTolerance = 1e-9;
/// Relative tolerance for the optimal flag on continuous objectives
/// (packing LP value, TSP tour length).
inline constexpr double kRelativeOptimalityTolerance = 1e-9;

struct ScoredResult {
  bool feasible = false;
  double rawObjective = 0;
  double quality = 0;  // in [0, 1]
  bool optimal = false;

  friend bool operator==(const ScoredResult&, const ScoredResult&) = default;
};

/// Feasibility check V(x, z). Throws kShapeMismatch when the solution kind or
/// length does not fit the instance.
bool verify(const PublicInstance& inst, const Solution& sol);
inline bool verify(const Instance& inst, const Solution& sol) {
  return verify(inst.pub, sol);
}

/// Raw objective of a well-shaped solution: colors used, satisfied clauses,
/// set size, packed value, or closed tour length.
double rawObjective(const PublicInstance& inst, const Solution& sol);

/// Normalized quality against the stored optimum. Malformed or infeasible
/// solutions score zero; an optimum <= 0 is an evaluation error.
ScoredResult quality(const Instance& inst, const Solution& sol);

/// Fraction of results flagged optimal.
double optimalityRate(std::span<const ScoredResult> results);

double tourLength(const TspInstance& tsp, std::span<const int> order);
int countSatisfied(const CnfFormula& f, const std::vector<bool>& values);
int countColors(std::span<const int> colors);

}  // namespace hintforge
