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

#include <chrono>
#include <cstdint>
#include <vector>

#include "hintforge/instance.hpp"

namespace hintforge {

/// Resource limits for an exact oracle call. Running out is reported as
/// ErrorCode::kBudgetExceeded, never as a silently degraded answer.
struct OracleBudget {
  double maxSeconds = 10.0;
  std::uint64_t maxStates = 200'000'000;
};

/// Search-node counter with a wall-clock deadline.
class BudgetMeter {
 public:
  explicit BudgetMeter(const OracleBudget& budget, const char* what);

  /// Counts one search state; throws once either limit is crossed.
  void tick() {
    if (++states_ > budget_.maxStates || ((states_ & 0xfff) == 0 && expired())) fail();
  }
  std::uint64_t states() const { return states_; }

 private:
  bool expired() const;
  [[noreturn]] void fail() const;

  OracleBudget budget_;
  const char* what_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t states_ = 0;
};

struct ColoringOptimum {
  int chromaticNumber = 0;
  Coloring coloring;
};

struct SetOptimum {
  int size = 0;
  VertexSet set;
};

struct LpOptimum {
  double value = 0;
  ItemFractions fractions;
  int iterations = 0;
};

struct MdkpOptimum {
  double value = 0;
  ItemPicks picks;
};

struct TspOptimum {
  double length = 0;
  Tour tour;
};

struct MaxSatOptimum {
  int satisfied = 0;
  Assignment assignment;
};

/// Exact chromatic number by DSATUR-ordered branch and bound with a maximum
/// clique lower bound. Graphs up to 64 vertices.
ColoringOptimum exactColoring(const Graph& g, const OracleBudget& budget = {});

/// Largest clique (bitset branch and bound, n <= 64).
std::vector<int> maximumClique(const Graph& g, const OracleBudget& budget = {});

/// Maximum independent set, n <= 64.
SetOptimum exactMis(const Graph& g, const OracleBudget& budget = {});

/// Minimum dominating set via set-cover branch and bound, n <= 64.
SetOptimum exactMds(const Graph& g, const OracleBudget& budget = {});

/// Packing LP max v.x s.t. usage^T x <= cap, 0 <= x <= 1 by bounded-variable
/// revised simplex.
LpOptimum exactLp(const PackingTable& lp, const OracleBudget& budget = {});

/// 0-1 multidimensional knapsack by depth-first branch and bound.
MdkpOptimum exactMdkp(const MdkpInstance& kp, const OracleBudget& budget = {});

/// Held-Karp dynamic program, n <= 18.
TspOptimum exactTsp(const TspInstance& tsp, const OracleBudget& budget = {});

/// MaxSAT by branch and bound on falsified-clause counts, d <= 32.
MaxSatOptimum exactMaxsat(const CnfFormula& f, const OracleBudget& budget = {});

struct ExactAnswer {
  double value = 0;
  Solution solution;
};

/// Dispatches to the class-specific oracle.
ExactAnswer solveExact(const PublicInstance& inst, const OracleBudget& budget = {});

}  // namespace hintforge
