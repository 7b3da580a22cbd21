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

#include "hintforge/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hintforge/rng.hpp"

namespace hintforge {

std::string_view toString(ProblemClass c) {
  switch (c) {
    case ProblemClass::kColoring: return "coloring";
    case ProblemClass::kMaxSat: return "maxsat";
    case ProblemClass::kMis: return "mis";
    case ProblemClass::kMds: return "mds";
    case ProblemClass::kPackingLp: return "packing-lp";
    case ProblemClass::kMdkp: return "mdkp";
    case ProblemClass::kTsp: return "tsp";
  }
  return "?";
}

ProblemClass parseProblemClass(std::string_view name) {
  for (ProblemClass c : kAllClasses) {
    if (toString(c) == name) return c;
  }
  if (name == "packinglp" || name == "lp") return ProblemClass::kPackingLp;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown problem class '" + std::string(name) + "'");
}

Graph Graph::fromEdges(int n, std::vector<std::pair<int, int>> edges) {
  require(n >= 0, ErrorCode::kInvalidArgument, "negative vertex count");
  for (auto& [u, v] : edges) {
    require(u != v, ErrorCode::kInvalidArgument,
            "self-loop at vertex " + std::to_string(u));
    require(u >= 0 && v >= 0 && u < n && v < n, ErrorCode::kInvalidArgument,
            "edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void Graph::validate() const {
  require(n >= 0, ErrorCode::kInvalidArgument, "negative vertex count");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    require(u >= 0 && u < v && v < n, ErrorCode::kInvalidArgument,
            "edge (" + std::to_string(u) + "," + std::to_string(v) +
                ") is not canonical or out of range");
    if (i > 0) {
      require(edges[i - 1] < edges[i], ErrorCode::kInvalidArgument,
              "edge list not sorted or has duplicates");
    }
  }
}

std::size_t CnfFormula::numLiterals() const {
  std::size_t total = 0;
  for (const auto& c : clauses) total += c.size();
  return total;
}

void CnfFormula::validate() const {
  require(numVars >= 0, ErrorCode::kInvalidArgument, "negative variable count");
  for (const auto& clause : clauses) {
    for (int lit : clause) {
      require(lit != 0 && std::abs(lit) <= numVars, ErrorCode::kInvalidArgument,
              "literal " + std::to_string(lit) + " out of range");
      require(std::find(clause.begin(), clause.end(), -lit) == clause.end(),
              ErrorCode::kInvalidArgument, "tautological clause");
    }
  }
}

void PackingTable::validate() const {
  require(numItems >= 0 && numResources >= 0, ErrorCode::kInvalidArgument,
          "negative packing dimensions");
  require(values.size() == static_cast<std::size_t>(numItems) &&
              usage.size() == static_cast<std::size_t>(numItems) * numResources &&
              capacities.size() == static_cast<std::size_t>(numResources),
          ErrorCode::kInvalidArgument, "packing table dimensions disagree");
  auto ok = [](double x) { return std::isfinite(x) && x >= 0; };
  require(std::all_of(values.begin(), values.end(), ok) &&
              std::all_of(usage.begin(), usage.end(), ok),
          ErrorCode::kInvalidArgument, "packing entries must be finite and nonnegative");
  require(std::all_of(capacities.begin(), capacities.end(),
                      [](double c) { return std::isfinite(c) && c > 0; }),
          ErrorCode::kInvalidArgument, "capacities must be positive");
}

void TspInstance::validate() const {
  require(n() >= 2, ErrorCode::kInvalidArgument, "TSP needs at least two cities");
  for (const auto& p : coords) {
    require(std::isfinite(p.x) && std::isfinite(p.y), ErrorCode::kInvalidArgument,
            "non-finite city coordinate");
  }
}

void PublicInstance::validate() const {
  switch (problemClass) {
    case ProblemClass::kColoring:
    case ProblemClass::kMis:
    case ProblemClass::kMds: graph().validate(); break;
    case ProblemClass::kMaxSat: formula().validate(); break;
    case ProblemClass::kPackingLp: packingLp().validate(); break;
    case ProblemClass::kMdkp: mdkp().validate(); break;
    case ProblemClass::kTsp: tsp().validate(); break;
  }
}

PublicInstance stripToPublic(const Instance& inst) { return inst.pub; }

namespace {

// perm[newLabel] = oldLabel; returns newLabel for each oldLabel.
std::vector<int> inverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

Graph permuteGraph(const Graph& g, const std::vector<int>& perm) {
  require(perm.size() == static_cast<std::size_t>(g.n), ErrorCode::kInvalidArgument,
          "permutation size does not match vertex count");
  const std::vector<int> to = inverse(perm);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) edges.emplace_back(to[u], to[v]);
  return Graph::fromEdges(g.n, std::move(edges));
}

Solution permuteSolution(ProblemClass c, const Solution& sol,
                         const std::vector<int>& perm) {
  require(isGraphClass(c), ErrorCode::kUnsupportedClass,
          "only graph-class solutions can be relabeled");
  if (const auto* col = std::get_if<Coloring>(&sol)) {
    require(col->colors.size() == perm.size(), ErrorCode::kShapeMismatch,
            "coloring length does not match permutation");
    Coloring out{std::vector<int>(col->colors.size())};
    for (std::size_t i = 0; i < perm.size(); ++i) {
      out.colors[i] = col->colors[static_cast<std::size_t>(perm[i])];
    }
    return out;
  }
  if (const auto* vs = std::get_if<VertexSet>(&sol)) {
    const std::vector<int> to = inverse(perm);
    VertexSet out;
    for (int v : vs->vertices) out.vertices.push_back(to[v]);
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
  }
  throw Error(ErrorCode::kShapeMismatch, "solution is not a graph-class shape");
}

Instance relabelGraph(const Instance& inst, const std::vector<int>& perm) {
  require(isGraphClass(inst.problemClass()), ErrorCode::kUnsupportedClass,
          "relabeling requires a graph-class instance");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    require(check[i] == static_cast<int>(i), ErrorCode::kInvalidArgument,
            "relabeling map is not a permutation");
  }
  Instance out = inst;
  out.pub.data = permuteGraph(inst.pub.graph(), perm);
  if (inst.eval.optimumSolution) {
    out.eval.optimumSolution =
        permuteSolution(inst.problemClass(), *inst.eval.optimumSolution, perm);
  }
  return out;
}

RelabeledInstance relabelGraph(const Instance& inst, std::uint64_t seed) {
  require(isGraphClass(inst.problemClass()), ErrorCode::kUnsupportedClass,
          "relabeling requires a graph-class instance");
  auto rng = CounterRng::derive(seed, "relabel", inst.id());
  std::vector<int> perm = rng.permutation(inst.pub.graph().n);
  return {relabelGraph(inst, perm), std::move(perm)};
}

std::string_view solutionKind(const Solution& sol) {
  return std::visit(
      [](const auto& s) -> std::string_view {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Coloring>) return "coloring";
        else if constexpr (std::is_same_v<T, Assignment>) return "assignment";
        else if constexpr (std::is_same_v<T, VertexSet>) return "vertex-set";
        else if constexpr (std::is_same_v<T, ItemFractions>) return "item-fractions";
        else if constexpr (std::is_same_v<T, ItemPicks>) return "item-picks";
        else return "tour";
      },
      sol);
}

}  // namespace hintforge
