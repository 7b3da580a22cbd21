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

// MaxSAT families. Every clause is satisfied by a planted assignment, so the
// optimum is the clause count.
#include <string>

#include "families.hpp"
#include "hintforge/error.hpp"

namespace hintforge::gen {

namespace {

// Two clauses forcing f == (a XOR flip), 0-based variables.
void copyClauses(int f, int a, bool flip, std::vector<std::vector<int>>& out) {
  int lf = f + 1, la = flip ? -(a + 1) : a + 1;
  out.push_back({-lf, la});
  out.push_back({lf, -la});
}

json mapVars(const std::vector<int>& vars, const std::vector<int>& inv) {
  json out = json::array();
  for (int v : vars) out.push_back(inv[v]);
  return out;
}

Planted finishMaxsat(CnfFormula f, std::vector<bool> z, json hidden) {
  Planted out;
  out.optimum = static_cast<double>(f.clauses.size());
  out.data = std::move(f);
  out.solution = Assignment{std::move(z)};
  out.hidden = std::move(hidden);
  return out;
}

}  // namespace

Planted communityParity(const FamilyContext& ctx) {
  const int d = ctx.i("numVars"), m = ctx.i("numClauses"), cs = ctx.i("communitySize");
  require(cs >= 3 && d % cs == 0, ErrorCode::kInvalidArgument,
          "community-parity: numVars must be a multiple of communitySize >= 3");
  const int communities = d / cs, followers = cs - 2;
  const int randomClauses = m - 4 * followers * communities;
  require(randomClauses >= 0, ErrorCode::kInvalidArgument,
          "community-parity: too few clauses for the parity constraints");

  auto frng = ctx.familyStream("masks");
  std::vector<bool> mask(followers);
  for (int t = 0; t < followers; ++t) mask[t] = frng.bernoulli(0.5);

  auto& rng = ctx.rng;
  std::vector<bool> z(d);
  CnfFormula f{d, {}};
  std::vector<int> anchors;
  for (int c = 0; c < communities; ++c) {
    int a1 = c * cs, a2 = a1 + 1;
    anchors.push_back(a1);
    anchors.push_back(a2);
    z[a1] = rng.bernoulli(0.5);
    z[a2] = rng.bernoulli(0.5);
    for (int t = 0; t < followers; ++t) {
      int v = a2 + 1 + t;
      z[v] = z[a1] ^ z[a2] ^ mask[t];
      parityClauses(v + 1, a1 + 1, a2 + 1, mask[t], f.clauses);
    }
  }
  const auto all = iotaVec(d);
  for (int r = 0; r < randomClauses; ++r) {
    if (rng.bernoulli(ctx.d("crossFraction"))) {
      f.clauses.push_back(plantedClause(rng, z, 3, all));
    } else {
      int c = static_cast<int>(rng.below(communities));
      auto pool = iotaVec(cs, c * cs);
      f.clauses.push_back(plantedClause(rng, z, 3, pool));
    }
  }
  auto inv = shuffleFormula(f, z, 0, rng);
  json comms = json::array();
  for (int c = 0; c < communities; ++c) comms.push_back(mapVars(iotaVec(cs, c * cs), inv));
  json masks = json::array();
  for (bool b : mask) masks.push_back(b ? 1 : 0);
  json hidden = {{"communities", comms}, {"anchors", mapVars(anchors, inv)}, {"masks", masks}};
  return finishMaxsat(std::move(f), std::move(z), std::move(hidden));
}

Planted lastClauseSignal(const FamilyContext& ctx) {
  const int d = ctx.i("numVars"), m = ctx.i("numClauses"), na = ctx.i("anchors");
  require(na >= 1 && na < d, ErrorCode::kInvalidArgument,
          "last-clause-signal: anchors must lie in [1, numVars)");
  const int randomClauses = m - 2 * (d - na) - 1;
  require(randomClauses >= 0, ErrorCode::kInvalidArgument,
          "last-clause-signal: too few clauses for the copy constraints");

  auto frng = ctx.familyStream("links");
  std::vector<int> source(d - na);
  std::vector<bool> flip(d - na);
  for (int t = 0; t < d - na; ++t) {
    source[t] = static_cast<int>(frng.below(na));
    flip[t] = frng.bernoulli(0.5);
  }

  auto& rng = ctx.rng;
  std::vector<bool> z(d);
  for (int a = 0; a < na; ++a) z[a] = rng.bernoulli(0.5);
  CnfFormula f{d, {}};
  for (int t = 0; t < d - na; ++t) {
    int v = na + t;
    z[v] = z[source[t]] ^ flip[t];
    copyClauses(v, source[t], flip[t], f.clauses);
  }
  const auto all = iotaVec(d);
  for (int r = 0; r < randomClauses; ++r)
    f.clauses.push_back(plantedClause(rng, z, 3, all));
  // The closing clause spells out the planted anchor pattern.
  std::vector<int> signal;
  for (int a = 0; a < na; ++a) signal.push_back(z[a] ? a + 1 : -(a + 1));
  f.clauses.push_back(signal);

  auto inv = shuffleFormula(f, z, 1, rng);
  json hidden = {{"anchors", mapVars(iotaVec(na), inv)}, {"signalClause", m - 1}};
  return finishMaxsat(std::move(f), std::move(z), std::move(hidden));
}

Planted latentBackdoor(const FamilyContext& ctx) {
  const int d = ctx.i("numVars"), m = ctx.i("numClauses"), na = ctx.i("anchors");
  const int regimes = ctx.i("regimes");
  const int bridges = ctx.i("bridgeClauses"), noise = ctx.i("noiseClauses");
  const int followers = d - na;
  require(na >= 1 && followers >= 2 && regimes >= 1, ErrorCode::kInvalidArgument,
          "latent-backdoor: needs anchors, followers, and regimes");
  require(2 * followers + bridges + noise == m, ErrorCode::kInvalidArgument,
          "latent-backdoor: clause budget must equal 2*(numVars-anchors)+bridge+noise");

  auto frng = ctx.familyStream("masks");
  std::vector<bool> mask(followers);
  for (int t = 0; t < followers; ++t) mask[t] = frng.bernoulli(0.5);

  auto& rng = ctx.rng;
  const int regime = static_cast<int>(rng.below(regimes));
  std::vector<bool> z(d);
  for (int a = 0; a < na; ++a) z[a] = rng.bernoulli(0.5);
  CnfFormula f{d, {}};
  for (int t = 0; t < followers; ++t) {
    int v = na + t, a = (t + regime) % na;
    z[v] = z[a] ^ mask[t];
    copyClauses(v, a, mask[t], f.clauses);
  }
  const auto all = iotaVec(d);
  std::vector<int> triple(3);
  for (int r = 0; r < bridges; ++r) {
    auto pick = rng.sample(followers, 2);
    triple = {na + pick[0], na + pick[1], static_cast<int>(rng.below(na))};
    f.clauses.push_back(plantedClause(rng, z, 3, triple));
  }
  for (int r = 0; r < noise; ++r) f.clauses.push_back(plantedClause(rng, z, 3, all));

  auto inv = shuffleFormula(f, z, 0, rng);
  json hidden = {{"anchors", mapVars(iotaVec(na), inv)}, {"regime", regime}};
  return finishMaxsat(std::move(f), std::move(z), std::move(hidden));
}

}  // namespace hintforge::gen
