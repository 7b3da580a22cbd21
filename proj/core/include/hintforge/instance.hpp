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

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "hintforge/error.hpp"

namespace hintforge {

enum class ProblemClass { kColoring, kMaxSat, kMis, kMds, kPackingLp, kMdkp, kTsp };

inline constexpr ProblemClass kAllClasses[] = {
    ProblemClass::kColoring, ProblemClass::kMaxSat,    ProblemClass::kMis,
    ProblemClass::kMds,      ProblemClass::kPackingLp, ProblemClass::kMdkp,
    ProblemClass::kTsp};

std::string_view toString(ProblemClass c);
ProblemClass parseProblemClass(std::string_view name);

constexpr bool isGraphClass(ProblemClass c) {
  return c == ProblemClass::kColoring || c == ProblemClass::kMis ||
         c == ProblemClass::kMds;
}

constexpr bool isMaximization(ProblemClass c) {
  return c == ProblemClass::kMaxSat || c == ProblemClass::kMis ||
         c == ProblemClass::kPackingLp || c == ProblemClass::kMdkp;
}

/// Simple undirected graph. Edges are canonical: u < v, sorted, unique.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  /// Canonicalizes (orients, sorts, dedupes) and validates an edge list.
  static Graph fromEdges(int n, std::vector<std::pair<int, int>> edges);

  std::size_t numEdges() const { return edges.size(); }
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// CNF over variables 1..numVars; literals are signed DIMACS integers.
struct CnfFormula {
  int numVars = 0;
  std::vector<std::vector<int>> clauses;

  std::size_t numClauses() const { return clauses.size(); }
  std::size_t numLiterals() const;
  void validate() const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Item/resource table shared by the packing LP and the 0-1 MDKP.
struct PackingTable {
  int numItems = 0;
  int numResources = 0;
  std::vector<double> values;      // numItems
  std::vector<double> usage;       // numItems x numResources, item-major
  std::vector<double> capacities;  // numResources

  double use(int item, int resource) const {
    return usage[static_cast<std::size_t>(item) * numResources + resource];
  }
  void validate() const;

  friend bool operator==(const PackingTable&, const PackingTable&) = default;
};

struct PackingLpInstance : PackingTable {
  friend bool operator==(const PackingLpInstance&, const PackingLpInstance&) = default;
};
struct MdkpInstance : PackingTable {
  friend bool operator==(const MdkpInstance&, const MdkpInstance&) = default;
};

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct TspInstance {
  std::vector<Point> coords;

  int n() const { return static_cast<int>(coords.size()); }
  double dist(int a, int b) const {
    return std::hypot(coords[a].x - coords[b].x, coords[a].y - coords[b].y);
  }
  void validate() const;

  friend bool operator==(const TspInstance&, const TspInstance&) = default;
};

// Solution shapes, one per problem class family.
struct Coloring {
  std::vector<int> colors;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};
struct Assignment {
  std::vector<bool> values;  // index i is variable i+1
  friend bool operator==(const Assignment&, const Assignment&) = default;
};
struct VertexSet {
  std::vector<int> vertices;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};
struct ItemFractions {
  std::vector<double> fractions;
  friend bool operator==(const ItemFractions&, const ItemFractions&) = default;
};
struct ItemPicks {
  std::vector<bool> picks;
  friend bool operator==(const ItemPicks&, const ItemPicks&) = default;
};
struct Tour {
  std::vector<int> order;
  friend bool operator==(const Tour&, const Tour&) = default;
};

using Solution =
    std::variant<Coloring, Assignment, VertexSet, ItemFractions, ItemPicks, Tour>;

using InstanceData =
    std::variant<Graph, CnfFormula, PackingLpInstance, MdkpInstance, TspInstance>;

/// The part of an instance a solver is allowed to see.
struct PublicInstance {
  std::string id;
  ProblemClass problemClass = ProblemClass::kColoring;
  InstanceData data;

  template <class T>
  const T& as() const {
    const T* p = std::get_if<T>(&data);
    require(p != nullptr, ErrorCode::kShapeMismatch,
            "instance " + id + " does not hold the requested payload type");
    return *p;
  }
  const Graph& graph() const { return as<Graph>(); }
  const CnfFormula& formula() const { return as<CnfFormula>(); }
  const PackingLpInstance& packingLp() const { return as<PackingLpInstance>(); }
  const MdkpInstance& mdkp() const { return as<MdkpInstance>(); }
  const TspInstance& tsp() const { return as<TspInstance>(); }

  /// Checks that the payload matches the class and satisfies its invariants.
  void validate() const;

  friend bool operator==(const PublicInstance&, const PublicInstance&) = default;
};

/// Evaluator-only fields. Never handed to solvers or proposers.
struct EvaluatorData {
  std::string familyId;
  nlohmann::json hiddenMetadata = nlohmann::json::object();
  double optimumValue = 0;
  std::optional<Solution> optimumSolution;
  /// False when the stored optimum is a planted value without a proof.
  bool certified = true;

  friend bool operator==(const EvaluatorData&, const EvaluatorData&) = default;
};

struct Instance {
  PublicInstance pub;
  EvaluatorData eval;

  const std::string& id() const { return pub.id; }
  ProblemClass problemClass() const { return pub.problemClass; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Drops every evaluator field; the result is safe to pass to solvers.
PublicInstance stripToPublic(const Instance& inst);

/// Relabels vertices so that new vertex i is old vertex perm[i].
Graph permuteGraph(const Graph& g, const std::vector<int>& perm);

/// Maps a graph-class solution through the same vertex permutation.
Solution permuteSolution(ProblemClass c, const Solution& sol,
                         const std::vector<int>& perm);

struct RelabeledInstance {
  Instance instance;
  std::vector<int> permutation;
};

/// Random isomorphic copy of a graph-class instance; the optimum value and
/// (relabeled) optimum solution carry over.
RelabeledInstance relabelGraph(const Instance& inst, std::uint64_t seed);

/// Same, with an explicit permutation.
Instance relabelGraph(const Instance& inst, const std::vector<int>& perm);

std::string_view solutionKind(const Solution& sol);

}  // namespace hintforge
