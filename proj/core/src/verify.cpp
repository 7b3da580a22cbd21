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

#include "hintforge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace hintforge {

namespace {

ProblemClass expectedClassKind(const Solution& sol) {
  return std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Coloring>) return ProblemClass::kColoring;
        else if constexpr (std::is_same_v<T, Assignment>) return ProblemClass::kMaxSat;
        else if constexpr (std::is_same_v<T, VertexSet>) return ProblemClass::kMis;
        else if constexpr (std::is_same_v<T, ItemFractions>) return ProblemClass::kPackingLp;
        else if constexpr (std::is_same_v<T, ItemPicks>) return ProblemClass::kMdkp;
        else return ProblemClass::kTsp;
      },
      sol);
}

void checkShape(const PublicInstance& inst, const Solution& sol) {
  ProblemClass want = expectedClassKind(sol);
  ProblemClass have = inst.problemClass == ProblemClass::kMds ? ProblemClass::kMis
                                                               : inst.problemClass;
  require(want == have, ErrorCode::kShapeMismatch,
          std::string(solutionKind(sol)) + " solution for a " +
              std::string(toString(inst.problemClass)) + " instance");
  auto needLength = [&](std::size_t got, std::size_t expected) {
    require(got == expected, ErrorCode::kShapeMismatch,
            "solution length " + std::to_string(got) + ", expected " +
                std::to_string(expected));
  };
  switch (inst.problemClass) {
    case ProblemClass::kColoring:
      needLength(std::get<Coloring>(sol).colors.size(),
                 static_cast<std::size_t>(inst.graph().n));
      break;
    case ProblemClass::kMaxSat:
      needLength(std::get<Assignment>(sol).values.size(),
                 static_cast<std::size_t>(inst.formula().numVars));
      break;
    case ProblemClass::kPackingLp:
      needLength(std::get<ItemFractions>(sol).fractions.size(),
                 static_cast<std::size_t>(inst.packingLp().numItems));
      break;
    case ProblemClass::kMdkp:
      needLength(std::get<ItemPicks>(sol).picks.size(),
                 static_cast<std::size_t>(inst.mdkp().numItems));
      break;
    default: break;
  }
}

bool vertexSetWellFormed(const VertexSet& vs, int n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : vs.vertices) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool isPermutation(std::span<const int> order, int n) {
  if (order.size() != static_cast<std::size_t>(n)) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

double tourLength(const TspInstance& tsp, std::span<const int> order) {
  double len = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    len += tsp.dist(order[i], order[(i + 1) % order.size()]);
  }
  return len;
}

int countSatisfied(const CnfFormula& f, const std::vector<bool>& values) {
  int sat = 0;
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      const bool v = values[static_cast<std::size_t>(std::abs(lit) - 1)];
      if ((lit > 0) == v) {
        ++sat;
        break;
      }
    }
  }
  return sat;
}

int countColors(std::span<const int> colors) {
  std::unordered_set<int> used(colors.begin(), colors.end());
  return static_cast<int>(used.size());
}

bool verify(const PublicInstance& inst, const Solution& sol) {
  checkShape(inst, sol);
  switch (inst.problemClass) {
    case ProblemClass::kColoring: {
      const auto& c = std::get<Coloring>(sol).colors;
      if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; })) return false;
      for (auto [u, v] : inst.graph().edges) {
        if (c[u] == c[v]) return false;
      }
      return true;
    }
    case ProblemClass::kMaxSat: return true;
    case ProblemClass::kMis: {
      const auto& g = inst.graph();
      const auto& vs = std::get<VertexSet>(sol);
      if (!vertexSetWellFormed(vs, g.n)) return false;
      std::vector<char> in(static_cast<std::size_t>(g.n), 0);
      for (int v : vs.vertices) in[v] = 1;
      for (auto [u, v] : g.edges) {
        if (in[u] && in[v]) return false;
      }
      return true;
    }
    case ProblemClass::kMds: {
      const auto& g = inst.graph();
      const auto& vs = std::get<VertexSet>(sol);
      if (!vertexSetWellFormed(vs, g.n)) return false;
      std::vector<char> dom(static_cast<std::size_t>(g.n), 0);
      for (int v : vs.vertices) dom[v] = 1;
      std::vector<char> chosen = dom;
      for (auto [u, v] : g.edges) {
        if (chosen[u]) dom[v] = 1;
        if (chosen[v]) dom[u] = 1;
      }
      return std::all_of(dom.begin(), dom.end(), [](char d) { return d != 0; });
    }
    case ProblemClass::kPackingLp: {
      const auto& lp = inst.packingLp();
      const auto& f = std::get<ItemFractions>(sol).fractions;
      for (double x : f) {
        if (!std::isfinite(x) || x < 0 || x > 1) return false;
      }
      for (int r = 0; r < lp.numResources; ++r) {
        double load = 0;
        for (int i = 0; i < lp.numItems; ++i) load += lp.use(i, r) * f[i];
        if (load > lp.capacities[r] + kLpFeasibilityTolerance) return false;
      }
      return true;
    }
    case ProblemClass::kMdkp: {
      const auto& kp = inst.mdkp();
      const auto& picks = std::get<ItemPicks>(sol).picks;
      for (int r = 0; r < kp.numResources; ++r) {
        double load = 0;
        for (int i = 0; i < kp.numItems; ++i) {
          if (picks[i]) load += kp.use(i, r);
        }
        if (load > kp.capacities[r]) return false;
      }
      return true;
    }
    case ProblemClass::kTsp:
      return isPermutation(std::get<Tour>(sol).order, inst.tsp().n());
  }
  return false;
}

double rawObjective(const PublicInstance& inst, const Solution& sol) {
  checkShape(inst, sol);
  switch (inst.problemClass) {
    case ProblemClass::kColoring: return countColors(std::get<Coloring>(sol).colors);
    case ProblemClass::kMaxSat:
      return countSatisfied(inst.formula(), std::get<Assignment>(sol).values);
    case ProblemClass::kMis:
    case ProblemClass::kMds:
      return static_cast<double>(std::get<VertexSet>(sol).vertices.size());
    case ProblemClass::kPackingLp: {
      const auto& lp = inst.packingLp();
      const auto& f = std::get<ItemFractions>(sol).fractions;
      double value = 0;
      for (int i = 0; i < lp.numItems; ++i) value += lp.values[i] * f[i];
      return value;
    }
    case ProblemClass::kMdkp: {
      const auto& kp = inst.mdkp();
      const auto& picks = std::get<ItemPicks>(sol).picks;
      double value = 0;
      for (int i = 0; i < kp.numItems; ++i) {
        if (picks[i]) value += kp.values[i];
      }
      return value;
    }
    case ProblemClass::kTsp:
      return tourLength(inst.tsp(), std::get<Tour>(sol).order);
  }
  return 0;
}

ScoredResult quality(const Instance& inst, const Solution& sol) {
  const double opt = inst.eval.optimumValue;
  require(opt > 0, ErrorCode::kEvaluation,
          "instance " + inst.id() + " has non-positive optimum value");
  ScoredResult r;
  try {
    r.feasible = verify(inst.pub, sol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kShapeMismatch) throw;
    return r;
  }
  if (!r.feasible) return r;
  r.rawObjective = rawObjective(inst.pub, sol);

  const ProblemClass c = inst.problemClass();
  const bool continuous = c == ProblemClass::kPackingLp || c == ProblemClass::kTsp;
  double q = 0;
  if (isMaximization(c)) {
    q = r.rawObjective / opt;
  } else {
    q = r.rawObjective > 0 ? opt / r.rawObjective : 0;
  }
  if (continuous) {
    r.optimal = q >= 1 - kRelativeOptimalityTolerance;
  } else {
    r.optimal = isMaximization(c) ? r.rawObjective >= opt : r.rawObjective <= opt;
  }
  if (q > 1) {
    // A certified optimum can only be beaten by floating-point noise.
    const double slack = continuous ? 1e-6 : 0.0;
    require(!inst.eval.certified || q <= 1 + slack, ErrorCode::kEvaluation,
            "solution for " + inst.id() + " beats the certified optimum");
    q = 1;
  }
  if (r.optimal) q = 1;
  r.quality = q;
  return r;
}

double optimalityRate(std::span<const ScoredResult> results) {
  require(!results.empty(), ErrorCode::kInvalidArgument,
          "optimality rate of an empty result list");
  std::size_t hits = 0;
  for (const auto& r : results) hits += r.optimal ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(results.size());
}

}  // namespace hintforge
