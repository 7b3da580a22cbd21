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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "hintforge/baselines.hpp"
#include "hintforge/error.hpp"
#include "hintforge/oracles.hpp"
#include "hintforge/verify.hpp"

namespace hintforge::baselines {

Assignment literalMajority(const CnfFormula& f) {
  std::vector<int> balance(f.numVars, 0);
  for (const auto& c : f.clauses)
    for (int lit : c) balance[std::abs(lit) - 1] += lit > 0 ? 1 : -1;
  Assignment a;
  a.values.resize(f.numVars);
  for (int v = 0; v < f.numVars; ++v) a.values[v] = balance[v] >= 0;
  return a;
}

Assignment randomAssignment(const CnfFormula& f, CounterRng& rng) {
  Assignment a;
  a.values.resize(f.numVars);
  for (int v = 0; v < f.numVars; ++v) a.values[v] = rng.bernoulli(0.5);
  return a;
}

Output<Assignment> greedyFlipSearch(const CnfFormula& f, int maxFlips) {
  Output<Assignment> out;
  auto& x = out.solution.values;
  x = literalMajority(f).values;
  std::vector<std::vector<int>> occ(f.numVars);
  std::vector<int> numTrue(f.clauses.size(), 0);
  for (std::size_t c = 0; c < f.clauses.size(); ++c)
    for (int lit : f.clauses[c]) {
      occ[std::abs(lit) - 1].push_back(static_cast<int>(c));
      numTrue[c] += x[std::abs(lit) - 1] == (lit > 0);
    }
  auto gainOf = [&](int v) {
    int gain = 0;
    for (int c : occ[v]) {
      // Literal of v in c is true now iff it agrees with x[v].
      for (int lit : f.clauses[c]) {
        if (std::abs(lit) - 1 != v) continue;
        bool nowTrue = x[v] == (lit > 0);
        if (nowTrue && numTrue[c] == 1) --gain;
        if (!nowTrue && numTrue[c] == 0) ++gain;
      }
    }
    return gain;
  };
  while (out.trace.repairIterations < maxFlips) {
    int best = -1, bestGain = 0;
    for (int v = 0; v < f.numVars; ++v) {
      int gv = gainOf(v);
      if (gv > bestGain) {
        best = v;
        bestGain = gv;
      }
    }
    if (best < 0) break;
    for (int c : occ[best])
      for (int lit : f.clauses[c])
        if (std::abs(lit) - 1 == best) numTrue[c] += x[best] == (lit > 0) ? -1 : 1;
    x[best] = !x[best];
    ++out.trace.repairIterations;
  }
  return out;
}

namespace {

std::vector<int> densityOrder(const PackingTable& t) {
  std::vector<double> density(t.numItems);
  for (int j = 0; j < t.numItems; ++j) {
    double weight = 0;
    for (int r = 0; r < t.numResources; ++r) weight += t.use(j, r) / t.capacities[r];
    density[j] = weight > 0 ? t.values[j] / weight : std::numeric_limits<double>::infinity();
  }
  std::vector<int> order(t.numItems);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return density[a] > density[b]; });
  return order;
}

bool fits(const PackingTable& t, const std::vector<double>& load, int j) {
  for (int r = 0; r < t.numResources; ++r)
    if (load[r] + t.use(j, r) > t.capacities[r]) return false;
  return true;
}

void addLoad(const PackingTable& t, std::vector<double>& load, int j, double sign) {
  for (int r = 0; r < t.numResources; ++r) load[r] += sign * t.use(j, r);
}

ItemPicks greedyFrom(const PackingTable& t, std::vector<bool> picks) {
  std::vector<double> load(t.numResources, 0.0);
  for (int j = 0; j < t.numItems; ++j)
    if (picks[j]) addLoad(t, load, j, 1);
  for (int j : densityOrder(t)) {
    if (picks[j] || !fits(t, load, j)) continue;
    picks[j] = true;
    addLoad(t, load, j, 1);
  }
  return {picks};
}

}  // namespace

ItemFractions densityFill(const PackingTable& t) {
  std::vector<double> room = t.capacities;
  ItemFractions out;
  out.fractions.assign(t.numItems, 0.0);
  for (int j : densityOrder(t)) {
    double x = 1.0;
    for (int r = 0; r < t.numResources; ++r)
      if (t.use(j, r) > 0) x = std::min(x, room[r] / t.use(j, r));
    x = std::max(0.0, x);
    out.fractions[j] = x;
    for (int r = 0; r < t.numResources; ++r) room[r] -= x * t.use(j, r);
  }
  return out;
}

ItemFractions uniformFraction(const PackingTable& t) {
  double x = 1.0;
  for (int r = 0; r < t.numResources; ++r) {
    double total = 0;
    for (int j = 0; j < t.numItems; ++j) total += t.use(j, r);
    if (total > 0) x = std::min(x, t.capacities[r] / total);
  }
  return {std::vector<double>(t.numItems, x)};
}

ItemPicks densityGreedyPicks(const PackingTable& t) {
  return greedyFrom(t, std::vector<bool>(t.numItems, false));
}

Output<ItemPicks> redundancyImprovedGreedy(const PackingTable& t, int maxMoves) {
  Output<ItemPicks> out;
  auto& picks = out.solution.picks;
  picks = densityGreedyPicks(t).picks;
  std::vector<double> load(t.numResources, 0.0);
  for (int j = 0; j < t.numItems; ++j)
    if (picks[j]) addLoad(t, load, j, 1);
  bool improved = true;
  while (improved && out.trace.repairIterations < maxMoves) {
    improved = false;
    // 1-swap: drop `a`, take a more valuable `b` that then fits.
    for (int a = 0; a < t.numItems && !improved; ++a) {
      if (!picks[a]) continue;
      addLoad(t, load, a, -1);
      for (int b = 0; b < t.numItems; ++b) {
        if (picks[b] || t.values[b] <= t.values[a] || !fits(t, load, b)) continue;
        picks[a] = false;
        picks[b] = true;
        addLoad(t, load, b, 1);
        improved = true;
        break;
      }
      if (!improved) addLoad(t, load, a, 1);
    }
    if (improved) {
      ++out.trace.repairIterations;
      for (int j : densityOrder(t)) {
        if (picks[j] || !fits(t, load, j)) continue;
        picks[j] = true;
        addLoad(t, load, j, 1);
      }
    }
  }
  return out;
}

Output<ItemPicks> lpRounding(const PackingTable& t, double lpSeconds) {
  Output<ItemPicks> out;
  LpOptimum lp;
  try {
    lp = exactLp(t, OracleBudget{lpSeconds, 50'000'000});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded && e.code() != ErrorCode::kNumericalFailure)
      throw;
    out.trace.fallbackUsed = true;
    out.solution = densityGreedyPicks(t);
    return out;
  }
  std::vector<bool> picks(t.numItems, false);
  int fractional = 0;
  for (int j = 0; j < t.numItems; ++j) {
    double x = lp.fractions.fractions[j];
    picks[j] = x >= 1 - 1e-9;
    fractional += x > 1e-9 && x < 1 - 1e-9;
  }
  // Rounding down is feasible up to LP round-off; repair if it is not.
  std::vector<double> load(t.numResources, 0.0);
  for (int j = 0; j < t.numItems; ++j)
    if (picks[j]) addLoad(t, load, j, 1);
  for (int j = t.numItems - 1; j >= 0; --j) {
    bool over = false;
    for (int r = 0; r < t.numResources; ++r) over = over || load[r] > t.capacities[r];
    if (!over) break;
    if (picks[j]) {
      picks[j] = false;
      addLoad(t, load, j, -1);
      ++out.trace.repairIterations;
    }
  }
  out.solution = greedyFrom(t, picks);
  out.trace.shortcutUsed = true;
  out.trace.residualSize = fractional;
  return out;
}

Tour randomTour(const TspInstance& t, CounterRng& rng) { return {rng.permutation(t.n())}; }

Tour nearestNeighbor(const TspInstance& t, int start) {
  const int n = t.n();
  std::vector<bool> seen(n, false);
  Tour tour;
  int cur = start;
  for (int step = 0; step < n; ++step) {
    tour.order.push_back(cur);
    seen[cur] = true;
    int next = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (next < 0 || t.dist(cur, v) < t.dist(cur, next))) next = v;
    cur = next;
  }
  return tour;
}

namespace {

// Cheapest-insertion construction where `farthest` picks the city to insert.
Tour insertion(const TspInstance& t, bool farthest) {
  const int n = t.n();
  if (n <= 2) return {std::vector<int>(n == 2 ? std::vector<int>{0, 1} : std::vector<int>{0})};
  std::vector<bool> in(n, false);
  std::vector<double> gap(n, std::numeric_limits<double>::infinity());
  std::vector<int> tour = {0};
  in[0] = true;
  for (int v = 0; v < n; ++v) gap[v] = t.dist(0, v);
  while (static_cast<int>(tour.size()) < n) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (in[v]) continue;
      if (pick < 0 || (farthest ? gap[v] > gap[pick] : gap[v] < gap[pick])) pick = v;
    }
    std::size_t at = tour.size();
    double bestCost = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < tour.size(); ++i) {
      int a = tour[i], b = tour[(i + 1) % tour.size()];
      double cost = t.dist(a, pick) + t.dist(pick, b) - (tour.size() > 1 ? t.dist(a, b) : 0);
      if (cost < bestCost) {
        bestCost = cost;
        at = i + 1;
      }
    }
    tour.insert(tour.begin() + static_cast<std::ptrdiff_t>(at), pick);
    in[pick] = true;
    for (int v = 0; v < n; ++v) gap[v] = std::min(gap[v], t.dist(pick, v));
  }
  return {tour};
}

}  // namespace

Tour nearestInsertion(const TspInstance& t) { return insertion(t, false); }
Tour farthestInsertion(const TspInstance& t) { return insertion(t, true); }

Output<Tour> twoOpt(const TspInstance& t, Tour tour, int maxPasses) {
  Output<Tour> out;
  auto& o = tour.order;
  const int n = static_cast<int>(o.size());
  while (n >= 4 && out.trace.repairIterations < maxPasses) {
    double bestDelta = -1e-10;
    int bi = -1, bj = -1;
    for (int i = 0; i < n - 1; ++i) {
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        int a = o[i], b = o[i + 1], c = o[j], d = o[(j + 1) % n];
        double delta = t.dist(a, c) + t.dist(b, d) - t.dist(a, b) - t.dist(c, d);
        if (delta < bestDelta) {
          bestDelta = delta;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) break;
    std::reverse(o.begin() + bi + 1, o.begin() + bj + 1);
    ++out.trace.repairIterations;
  }
  out.solution = std::move(tour);
  return out;
}

Output<Tour> multiStartTwoOpt(const TspInstance& t, int starts, int maxPasses,
                              CounterRng& rng) {
  require(starts >= 1, ErrorCode::kInvalidArgument, "multi-start 2-opt needs a start");
  Output<Tour> best;
  double bestLen = std::numeric_limits<double>::infinity();
  int passes = 0;
  for (int s = 0; s < starts; ++s) {
    auto run = twoOpt(t, randomTour(t, rng), maxPasses);
    passes += run.trace.repairIterations;
    double len = tourLength(t, run.solution.order);
    if (len < bestLen) {
      bestLen = len;
      best = std::move(run);
    }
  }
  best.trace.repairIterations = passes;
  return best;
}

}  // namespace hintforge::baselines
