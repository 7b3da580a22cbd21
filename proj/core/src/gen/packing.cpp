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

// Packing LP and MDKP families. Both plant a KKT point: duals on an active
// resource set price every item, items above their price are taken, items
// below are left out, items exactly at price may be fractional, and active
// capacities are tight. For MDKP every number is an integer and no item is
// fractional, so the LP optimum is integral and therefore also the integer
// optimum.
#include <algorithm>
#include <cmath>
#include <string>

#include "families.hpp"
#include "hintforge/error.hpp"

namespace hintforge::gen {

namespace {

enum class ItemClass { kAbove, kBelow, kFractional };

struct PackPlan {
  int numItems = 0;
  int numResources = 0;
  bool integral = false;
  std::vector<double> usage;   // item-major
  std::vector<double> duals;   // zero outside the active set
  std::vector<ItemClass> cls;  // per item
  double aboveShare = 0.45;    // used when classes are drawn by plantPacking
  double marginLo = 0.1;
  double marginHi = 0.6;
  double slackLo = 0.1;
  double slackHi = 0.5;
  int fractionalPerActive = 1;

  double& use(int j, int r) { return usage[static_cast<std::size_t>(j) * numResources + r]; }
  double use(int j, int r) const { return usage[static_cast<std::size_t>(j) * numResources + r]; }
};

std::vector<int> activeSet(const PackPlan& p) {
  std::vector<int> out;
  for (int r = 0; r < p.numResources; ++r)
    if (p.duals[r] > 0) out.push_back(r);
  return out;
}

// Fills in classes (when empty), values and capacities, then shuffles items.
Planted plantPacking(ProblemClass c, PackPlan p, CounterRng& rng, json hidden) {
  const int n = p.numItems, m = p.numResources;
  std::vector<double> price(n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < m; ++r) price[j] += p.duals[r] * p.use(j, r);

  if (p.cls.empty()) {
    p.cls.resize(n);
    for (int j = 0; j < n; ++j)
      p.cls[j] = rng.bernoulli(p.aboveShare) ? ItemClass::kAbove : ItemClass::kBelow;
  }
  auto active = activeSet(p);
  for (int r : active) {
    // Each active resource needs a taken item using it, or it cannot be tight
    // at a positive capacity.
    int best = -1;
    for (int j = 0; j < n; ++j)
      if (p.use(j, r) > 0 && (best < 0 || p.use(j, r) > p.use(best, r))) best = j;
    require(best >= 0, ErrorCode::kGeneration, "packing plant: unused active resource");
    bool covered = false;
    for (int j = 0; j < n; ++j)
      covered = covered || (p.use(j, r) > 0 && p.cls[j] != ItemClass::kBelow);
    if (!covered) p.cls[best] = ItemClass::kAbove;
  }
  if (!p.integral) {
    for (int r : active) {
      for (int t = 0; t < p.fractionalPerActive; ++t) {
        int j = static_cast<int>(rng.below(n));
        if (p.use(j, r) > 0) p.cls[j] = ItemClass::kFractional;
      }
    }
  }
  for (int j = 0; j < n; ++j)
    if (price[j] <= 0) p.cls[j] = ItemClass::kAbove;

  std::vector<double> values(n), x(n);
  for (int j = 0; j < n; ++j) {
    double u = rng.uniform(p.marginLo, p.marginHi);
    if (price[j] <= 0) {
      values[j] = p.integral ? static_cast<double>(rng.between(1, 50)) : rng.uniform(1, 10);
      x[j] = 1;
      continue;
    }
    switch (p.cls[j]) {
      case ItemClass::kAbove:
        values[j] = p.integral ? price[j] + std::max(1.0, std::round(price[j] * u))
                               : price[j] * (1 + u);
        x[j] = 1;
        break;
      case ItemClass::kBelow:
        values[j] = p.integral ? std::max(0.0, price[j] - std::max(1.0, std::round(price[j] * u)))
                               : price[j] * (1 - u);
        x[j] = 0;
        break;
      case ItemClass::kFractional:
        values[j] = price[j];
        x[j] = rng.uniform(0.2, 0.8);
        break;
    }
  }
  std::vector<double> caps(m, 0.0);
  for (int r = 0; r < m; ++r) {
    double load = 0, biggest = 0;
    for (int j = 0; j < n; ++j) {
      load += p.use(j, r) * x[j];
      biggest = std::max(biggest, p.use(j, r));
    }
    if (p.duals[r] > 0) {
      caps[r] = load;
    } else if (load <= 0) {
      caps[r] = std::max(1.0, biggest);
    } else {
      double extra = load * rng.uniform(p.slackLo, p.slackHi);
      caps[r] = p.integral ? load + std::max(1.0, std::round(extra)) : load + extra;
    }
    require(caps[r] > 0, ErrorCode::kGeneration, "packing plant: zero capacity");
  }

  // Shuffle item order so position carries no signal. perm[new] = old.
  auto perm = rng.permutation(n);
  PackingTable t;
  t.numItems = n;
  t.numResources = m;
  t.values.resize(n);
  t.usage.resize(static_cast<std::size_t>(n) * m);
  t.capacities = caps;
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) {
    int j = perm[i];
    t.values[i] = values[j];
    xs[i] = x[j];
    for (int r = 0; r < m; ++r) t.usage[static_cast<std::size_t>(i) * m + r] = p.use(j, r);
  }
  double optimum = 0;
  for (int i = 0; i < n; ++i) optimum += t.values[i] * xs[i];

  hidden["activeResources"] = active;
  hidden["duals"] = p.duals;
  Planted out;
  out.hidden = std::move(hidden);
  out.optimum = optimum;
  if (c == ProblemClass::kPackingLp) {
    PackingLpInstance lp;
    static_cast<PackingTable&>(lp) = std::move(t);
    out.data = std::move(lp);
    out.solution = ItemFractions{xs};
  } else {
    MdkpInstance kp;
    static_cast<PackingTable&>(kp) = std::move(t);
    out.data = std::move(kp);
    std::vector<bool> picks(n);
    for (int i = 0; i < n; ++i) picks[i] = xs[i] > 0.5;
    out.solution = ItemPicks{picks};
  }
  return out;
}

PackPlan basePlan(const FamilyContext& ctx, bool integral) {
  PackPlan p;
  p.numItems = ctx.i("numItems");
  p.numResources = ctx.i("numResources");
  require(p.numItems >= 1 && p.numResources >= 1, ErrorCode::kInvalidArgument,
          "packing: needs at least one item and one resource");
  p.integral = integral;
  p.usage.assign(static_cast<std::size_t>(p.numItems) * p.numResources, 0.0);
  p.duals.assign(p.numResources, 0.0);
  return p;
}

double intUsage(CounterRng& rng, int lo, int hi) {
  return static_cast<double>(rng.between(lo, hi));
}

}  // namespace

Planted blockCoupled(const FamilyContext& ctx) {
  auto p = basePlan(ctx, false);
  const int m = p.numResources;
  require(m >= 2, ErrorCode::kInvalidArgument, "block-coupled: needs two resources");
  const int blocks = m - 1, coupling = m - 1;
  auto& rng = ctx.rng;
  std::vector<int> blockOf(p.numItems);
  for (int j = 0; j < p.numItems; ++j) {
    int b = j % blocks;
    blockOf[j] = b;
    p.use(j, b) = rng.uniform(5, 15);
    p.use(j, coupling) = rng.uniform(0.5, 2);
    if (blocks > 1 && rng.bernoulli(ctx.d("spillover")))
      p.use(j, (b + 1) % blocks) = rng.uniform(0, 3);
  }
  p.duals[coupling] = rng.uniform(0.2, 0.6);
  for (int b = 0; b < blocks; ++b)
    if (rng.bernoulli(ctx.d("activeBlockShare"))) p.duals[b] = rng.uniform(0.5, 1.5);
  json hidden = {{"blocks", blocks}, {"couplingResource", coupling}};
  return plantPacking(ProblemClass::kPackingLp, std::move(p), rng, std::move(hidden));
}

Planted activeResource(const FamilyContext& ctx) {
  auto p = basePlan(ctx, false);
  const int m = p.numResources, regimes = ctx.i("regimes");
  const int activeCount = std::max(1, std::min(m, ctx.i("activeCount")));
  // Regimes (active set and price pattern) belong to the family.
  auto frng = ctx.familyStream("regimes");
  std::vector<std::vector<double>> regimeDuals(regimes, std::vector<double>(m, 0.0));
  for (auto& duals : regimeDuals)
    for (int r : frng.sample(m, activeCount)) duals[r] = frng.uniform(0.5, 2.0);

  auto& rng = ctx.rng;
  const int regime = static_cast<int>(rng.below(regimes));
  for (int r = 0; r < m; ++r)
    if (regimeDuals[regime][r] > 0) p.duals[r] = regimeDuals[regime][r] * rng.uniform(0.9, 1.1);
  const double density = ctx.d("usageDensity");
  for (int j = 0; j < p.numItems; ++j)
    for (int r = 0; r < m; ++r)
      if (rng.bernoulli(density)) p.use(j, r) = rng.uniform(1, 10);
  json hidden = {{"regime", regime}};
  return plantPacking(ProblemClass::kPackingLp, std::move(p), rng, std::move(hidden));
}

Planted singleBottleneck(const FamilyContext& ctx) {
  auto p = basePlan(ctx, false);
  const int m = p.numResources;
  const int hot = static_cast<int>(ctx.familyStream("bottleneck").below(m));
  auto& rng = ctx.rng;
  const double density = ctx.d("usageDensity");
  for (int j = 0; j < p.numItems; ++j)
    for (int r = 0; r < m; ++r)
      if (r == hot || rng.bernoulli(density)) p.use(j, r) = rng.uniform(1, 10);
  p.duals[hot] = rng.uniform(0.5, 2.0);
  json hidden = {{"bottleneck", hot}};
  return plantPacking(ProblemClass::kPackingLp, std::move(p), rng, std::move(hidden));
}

Planted decoyComplement(const FamilyContext& ctx) {
  auto p = basePlan(ctx, true);
  const int m = p.numResources;
  const int scarce = static_cast<int>(ctx.familyStream("scarce").below(m));
  auto& rng = ctx.rng;
  const double decoyShare = ctx.d("decoyShare");
  p.cls.resize(p.numItems);
  std::vector<int> decoys;
  for (int j = 0; j < p.numItems; ++j) {
    bool decoy = rng.bernoulli(decoyShare);
    for (int r = 0; r < m; ++r) p.use(j, r) = intUsage(rng, 1, 100);
    if (decoy) {
      // Heavy on the scarce resource and priced out: never taken.
      p.use(j, scarce) = intUsage(rng, 60, 100);
      p.cls[j] = ItemClass::kBelow;
      decoys.push_back(j);
    } else {
      p.use(j, scarce) = intUsage(rng, 1, 30);
      p.cls[j] = rng.bernoulli(ctx.d("complementTakeShare")) ? ItemClass::kAbove
                                                             : ItemClass::kBelow;
    }
  }
  p.duals[scarce] = static_cast<double>(rng.between(2, 4));
  json hidden = {{"scarceResource", scarce}, {"decoyCount", decoys.size()}};
  return plantPacking(ProblemClass::kMdkp, std::move(p), rng, std::move(hidden));
}

Planted latentClass(const FamilyContext& ctx) {
  auto p = basePlan(ctx, true);
  const int m = p.numResources, protos = ctx.i("prototypes");
  auto frng = ctx.familyStream("prototypes");
  std::vector<std::vector<int>> proto(protos, std::vector<int>(m));
  for (auto& row : proto)
    for (int& u : row) u = static_cast<int>(frng.between(10, 90));

  auto& rng = ctx.rng;
  const double noise = ctx.d("noise");
  std::vector<int> classOf(p.numItems);
  for (int j = 0; j < p.numItems; ++j) {
    int c = static_cast<int>(rng.below(protos));
    classOf[j] = c;
    for (int r = 0; r < m; ++r) {
      double u = proto[c][r] * rng.uniform(1 - noise, 1 + noise);
      p.use(j, r) = std::clamp(std::round(u), 1.0, 100.0);
    }
  }
  const int active = static_cast<int>(rng.below(m));
  p.duals[active] = static_cast<double>(rng.between(1, 4));
  json hidden = {{"activeResource", active}};
  return plantPacking(ProblemClass::kMdkp, std::move(p), rng, std::move(hidden));
}

Planted singleResource(const FamilyContext& ctx) {
  auto p = basePlan(ctx, true);
  const int m = p.numResources;
  const int hot = static_cast<int>(ctx.familyStream("resource").below(m));
  auto& rng = ctx.rng;
  for (int j = 0; j < p.numItems; ++j)
    for (int r = 0; r < m; ++r) p.use(j, r) = intUsage(rng, 1, 100);
  p.duals[hot] = static_cast<double>(rng.between(1, 4));
  json hidden = {{"resource", hot}};
  return plantPacking(ProblemClass::kMdkp, std::move(p), rng, std::move(hidden));
}

}  // namespace hintforge::gen
