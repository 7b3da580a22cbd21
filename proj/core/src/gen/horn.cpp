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
#include <set>
#include <string>

#include "families.hpp"
#include "hintforge/error.hpp"
#include "hintforge/generators.hpp"
#include "hintforge/oracles.hpp"
#include "hintforge/sat.hpp"

namespace hintforge {

void HornBackdoorParams::validate() const {
  require(k >= 1 && 2 * k < d, ErrorCode::kInvalidArgument,
          "horn backdoor: need 1 <= k < d/2");
  require(numClauses >= 1, ErrorCode::kInvalidArgument, "horn backdoor: need M >= 1");
  require(rho >= 0 && rho <= 1, ErrorCode::kInvalidArgument,
          "horn backdoor: rho must lie in [0, 1]");
  require(hornWidth >= 1 && hornWidth <= d, ErrorCode::kInvalidArgument,
          "horn backdoor: hornWidth must lie in [1, d]");
  require(tailSize >= 0 && tailSize <= d - k - 1, ErrorCode::kInvalidArgument,
          "horn backdoor: tailSize must lie in [0, d-k-1]");
}

double HornBackdoorParams::margin() const {
  return rho * (1.0 / k - 1.0 / (d - k));
}

namespace {

CnfFormula drawHornFormula(const HornBackdoorParams& p, const std::vector<int>& backdoor,
                           CounterRng& rng) {
  std::vector<bool> inB(p.d, false);
  for (int v : backdoor) inB[v] = true;
  std::vector<int> outside;
  for (int v = 0; v < p.d; ++v)
    if (!inB[v]) outside.push_back(v);

  CnfFormula f{p.d, {}};
  f.clauses.reserve(p.numClauses);
  std::vector<int> tailPool;
  for (int t = 0; t < p.numClauses; ++t) {
    std::vector<int> clause;
    if (!rng.bernoulli(p.rho)) {
      auto vars = rng.sample(p.d, p.hornWidth);
      int head = rng.bernoulli(0.5) ? static_cast<int>(rng.below(vars.size())) : -1;
      for (int s = 0; s < p.hornWidth; ++s)
        clause.push_back(s == head ? vars[s] + 1 : -(vars[s] + 1));
    } else {
      int i = backdoor[rng.below(backdoor.size())];
      int j = outside[rng.below(outside.size())];
      clause = {i + 1, j + 1};
      tailPool.clear();
      for (int v : outside)
        if (v != j) tailPool.push_back(v);
      for (int s : rng.sample(static_cast<int>(tailPool.size()), p.tailSize))
        clause.push_back(-(tailPool[s] + 1));
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

std::vector<int> drawBackdoor(const HornBackdoorParams& p, CounterRng& rng) {
  auto b = rng.sample(p.d, p.k);
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace

HornBackdoorFormula generateHornBackdoorFormula(const HornBackdoorParams& params,
                                                std::uint64_t seed) {
  params.validate();
  auto brng = CounterRng::derive(seed, "backdoor");
  auto crng = CounterRng::derive(seed, "clauses");
  HornBackdoorFormula out;
  out.backdoor = drawBackdoor(params, brng);
  out.formula = drawHornFormula(params, out.backdoor, crng);
  return out;
}

std::vector<HornBackdoorFormula> sampleHornBackdoorFamily(const HornBackdoorParams& params,
                                                          int count, std::uint64_t seed) {
  params.validate();
  require(count >= 0, ErrorCode::kInvalidArgument, "sample count must be nonnegative");
  auto brng = CounterRng::derive(seed, "backdoor");
  auto backdoor = drawBackdoor(params, brng);
  std::vector<HornBackdoorFormula> out(count);
  for (int t = 0; t < count; ++t) {
    auto crng = CounterRng::derive(seed, "formula", t);
    out[t].backdoor = backdoor;
    out[t].formula = drawHornFormula(params, backdoor, crng);
  }
  return out;
}

bool isStrongHornBackdoor(const CnfFormula& f, const std::vector<int>& vars) {
  // Some assignment to `vars` falsifies every backdoor literal of a clause, so
  // every residual is Horn exactly when each clause has at most one positive
  // literal outside `vars`.
  std::set<int> b(vars.begin(), vars.end());
  for (const auto& c : f.clauses) {
    int free = 0;
    for (int lit : c) free += lit > 0 && !b.count(lit - 1);
    if (free > 1) return false;
  }
  return true;
}

namespace gen {

Planted hornBackdoor(const FamilyContext& ctx) {
  HornBackdoorParams p;
  p.d = ctx.i("numVars");
  p.k = ctx.i("backdoorSize");
  p.numClauses = ctx.i("numClauses");
  p.rho = ctx.d("rho");
  p.hornWidth = ctx.i("hornWidth");
  p.tailSize = ctx.i("tailSize");
  p.validate();
  auto frng = ctx.familyStream("backdoor");
  auto backdoor = drawBackdoor(p, frng);
  auto f = drawHornFormula(p, backdoor, ctx.rng);

  Planted out;
  auto r = dpll(f);
  if (r.satisfiable) {
    out.optimum = static_cast<double>(f.clauses.size());
    out.solution = Assignment{r.assignment};
  } else {
    auto best = exactMaxsat(f);
    out.optimum = best.satisfied;
    out.solution = best.assignment;
  }
  out.hidden = {{"backdoor", backdoor}, {"rho", p.rho}, {"satisfiable", r.satisfiable}};
  out.data = std::move(f);
  return out;
}

}  // namespace gen
}  // namespace hintforge
