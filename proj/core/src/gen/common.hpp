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

// Internal helpers shared by the family generators.
#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hintforge/instance.hpp"
#include "hintforge/rng.hpp"

namespace hintforge::gen {

using nlohmann::json;

/// What a family generator hands back before ids and class tags are attached.
struct Planted {
  InstanceData data;
  json hidden = json::object();
  double optimum = 0;
  Solution solution;
};

/// Everything a family generator may read.
struct FamilyContext {
  const json& params;
  std::uint64_t familySeed;  // family-level hidden structure
  CounterRng& rng;           // this instance's stream

  int i(const char* key) const { return params.at(key).get<int>(); }
  double d(const char* key) const { return params.at(key).get<double>(); }
  CounterRng familyStream(const char* tag) const {
    return CounterRng::derive(familySeed, tag);
  }
};

using FamilyFn = Planted (*)(const FamilyContext&);

class EdgeSet {
 public:
  explicit EdgeSet(int n) : n_(n) {}
  void add(int u, int v) {
    if (u == v) return;
    if (u > v) std::swap(u, v);
    edges_.insert({u, v});
  }
  bool has(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) > 0;
  }
  int n() const { return n_; }
  Graph graph() const {
    return Graph::fromEdges(n_, {edges_.begin(), edges_.end()});
  }

 private:
  int n_;
  std::set<std::pair<int, int>> edges_;
};

/// Random relabeling applied to every generated graph: perm[new] = old.
struct GraphRelabel {
  std::vector<int> perm;
  std::vector<int> inv;  // inv[old] = new

  explicit GraphRelabel(CounterRng& rng, int n) : perm(rng.permutation(n)), inv(n) {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  }
  int operator()(int old) const { return inv[old]; }
  std::vector<int> map(const std::vector<int>& olds) const {
    std::vector<int> out;
    out.reserve(olds.size());
    for (int v : olds) out.push_back(inv[v]);
    return out;
  }
};

/// Relabels vertices of graph, solution, and every hidden vertex list.
Planted relabelPlantedGraph(ProblemClass c, const EdgeSet& edges, Solution sol,
                            double optimum, json hidden,
                            const std::vector<std::string>& vertexListKeys,
                            CounterRng& rng);

/// Width-w clause over distinct variables satisfied by `z` (0-based values).
std::vector<int> plantedClause(CounterRng& rng, const std::vector<bool>& z,
                               int width, std::span<const int> pool);

/// Clauses forcing var(a) XOR var(b) XOR var(c) == parity, all satisfied by
/// any assignment meeting it (1-based variables).
void parityClauses(int a, int b, int c, bool parity,
                   std::vector<std::vector<int>>& out);

/// Renames variables by a random permutation and shuffles clause order,
/// keeping the last `pinnedTail` clauses at the end. Returns the new 0-based
/// index of each old variable.
std::vector<int> shuffleFormula(CnfFormula& f, std::vector<bool>& z,
                                int pinnedTail, CounterRng& rng);

std::vector<int> iotaVec(int n, int start = 0);

}  // namespace hintforge::gen
