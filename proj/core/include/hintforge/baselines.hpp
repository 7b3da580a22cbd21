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
#include <vector>

#include "hintforge/instance.hpp"
#include "hintforge/rng.hpp"
#include "hintforge/trace.hpp"

namespace hintforge::baselines {

template <class S>
struct Output {
  S solution;
  DiagnosticTrace trace;
};

// Coloring. Greedy colorings give each vertex the smallest color unused by
// already-colored neighbors.
Coloring greedyColoring(const Graph& g, const std::vector<int>& order);
std::vector<int> largestFirstOrder(const Graph& g);
std::vector<int> smallestLastOrder(const Graph& g);
Coloring dsatur(const Graph& g);

// MaxSAT.
Assignment literalMajority(const CnfFormula& f);
Assignment randomAssignment(const CnfFormula& f, CounterRng& rng);
/// Best-improvement single flips from the majority assignment.
Output<Assignment> greedyFlipSearch(const CnfFormula& f, int maxFlips);

// MIS.
VertexSet minDegreeGreedy(const Graph& g);
VertexSet randomGreedyIndependent(const Graph& g, CounterRng& rng);
/// Static order by degree over summed neighbor degree, ascending.
VertexSet ratioGreedyIndependent(const Graph& g);
/// Min-degree greedy followed by (1,2)-swaps until none applies.
Output<VertexSet> independentLocalImprovement(const Graph& g, int maxSwaps);

// MDS.
VertexSet highDegreeGreedy(const Graph& g);
VertexSet marginalGainGreedy(const Graph& g);
/// Marginal-gain greedy, then drops vertices whose removal keeps domination.
Output<VertexSet> redundancyAwareGreedy(const Graph& g);

// Packing LP.
ItemFractions densityFill(const PackingTable& t);
ItemFractions uniformFraction(const PackingTable& t);

// MDKP.
ItemPicks densityGreedyPicks(const PackingTable& t);
/// Density greedy, then fill and 1-swap improvements.
Output<ItemPicks> redundancyImprovedGreedy(const PackingTable& t, int maxMoves);
/// Rounds down the LP optimum and fills greedily; falls back to density
/// greedy (fallbackUsed) when the LP exceeds its budget.
Output<ItemPicks> lpRounding(const PackingTable& t, double lpSeconds);

// TSP.
Tour randomTour(const TspInstance& t, CounterRng& rng);
Tour nearestNeighbor(const TspInstance& t, int start = 0);
Tour nearestInsertion(const TspInstance& t);
Tour farthestInsertion(const TspInstance& t);
/// Best-improvement 2-opt; repairIterations counts improving passes.
Output<Tour> twoOpt(const TspInstance& t, Tour tour, int maxPasses);
Output<Tour> multiStartTwoOpt(const TspInstance& t, int starts, int maxPasses, CounterRng& rng);

}  // namespace hintforge::baselines
