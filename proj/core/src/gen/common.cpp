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

#include "common.hpp"

#include <numeric>

namespace hintforge::gen {

namespace {

json mapVertexJson(const json& j, const GraphRelabel& relabel) {
  if (j.is_number_integer()) return relabel(j.get<int>());
  json out = json::array();
  for (const auto& x : j) out.push_back(mapVertexJson(x, relabel));
  return out;
}

}  // namespace

Planted relabelPlantedGraph(ProblemClass c, const EdgeSet& edges, Solution sol,
                            double optimum, json hidden,
                            const std::vector<std::string>& vertexListKeys,
                            CounterRng& rng) {
  GraphRelabel relabel(rng, edges.n());
  Planted out;
  out.data = permuteGraph(edges.graph(), relabel.perm);
  out.solution = permuteSolution(c, sol, relabel.perm);
  for (const auto& key : vertexListKeys)
    hidden[key] = mapVertexJson(hidden.at(key), relabel);
  out.hidden = std::move(hidden);
  out.optimum = optimum;
  return out;
}

std::vector<int> plantedClause(CounterRng& rng, const std::vector<bool>& z,
                               int width, std::span<const int> pool) {
  auto picks = rng.sample(static_cast<int>(pool.size()), width);
  std::vector<int> clause;
  clause.reserve(width);
  bool sat = false;
  for (int p : picks) {
    int v = pool[p];
    bool positive = rng.bernoulli(0.5);
    sat = sat || (positive == z[v]);
    clause.push_back(positive ? v + 1 : -(v + 1));
  }
  if (!sat) {
    auto& lit = clause[rng.below(clause.size())];
    lit = -lit;
  }
  return clause;
}

void parityClauses(int a, int b, int c, bool parity,
                   std::vector<std::vector<int>>& out) {
  for (int mask = 0; mask < 8; ++mask) {
    bool x = mask & 4, y = mask & 2, w = mask & 1;
    if ((x ^ y ^ w) == parity) continue;
    out.push_back({x ? -a : a, y ? -b : b, w ? -c : c});
  }
}

std::vector<int> shuffleFormula(CnfFormula& f, std::vector<bool>& z,
                                int pinnedTail, CounterRng& rng) {
  const int d = f.numVars;
  auto perm = rng.permutation(d);  // perm[new] = old
  std::vector<int> inv(d);
  for (int i = 0; i < d; ++i) inv[perm[i]] = i;
  for (auto& c : f.clauses)
    for (int& lit : c) lit = lit > 0 ? inv[lit - 1] + 1 : -(inv[-lit - 1] + 1);
  std::vector<bool> nz(d);
  for (int i = 0; i < d; ++i) nz[i] = z[perm[i]];
  z = std::move(nz);
  auto head = static_cast<std::ptrdiff_t>(f.clauses.size()) - pinnedTail;
  rng.shuffle(std::span(f.clauses.data(), static_cast<std::size_t>(head)));
  return inv;
}

std::vector<int> iotaVec(int n, int start) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), start);
  return v;
}

}  // namespace hintforge::gen
