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

#include <cmath>

#include <gtest/gtest.h>

#include "hintforge/error.hpp"
#include "hintforge/verify.hpp"

namespace hintforge {
namespace {

Instance make(ProblemClass c, InstanceData data, double optimum, bool certified = true) {
  Instance inst;
  inst.pub = {"fixture", c, std::move(data)};
  inst.eval.optimumValue = optimum;
  inst.eval.certified = certified;
  return inst;
}

PackingTable table() {
  PackingTable t;
  t.numItems = 2;
  t.numResources = 1;
  t.values = {3, 2};
  t.usage = {1, 1};
  t.capacities = {1};
  return t;
}

TEST(Quality, Coloring) {
  // Triangle with a pendant vertex: chromatic number 3.
  auto inst = make(ProblemClass::kColoring, Graph::fromEdges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), 3);
  auto opt = quality(inst, Coloring{{0, 1, 2, 0}});
  EXPECT_TRUE(opt.optimal);
  EXPECT_EQ(opt.quality, 1.0);
  auto four = quality(inst, Coloring{{0, 1, 2, 3}});
  EXPECT_TRUE(four.feasible);
  EXPECT_FALSE(four.optimal);
  EXPECT_EQ(four.quality, 3.0 / 4.0);
  EXPECT_FALSE(quality(inst, Coloring{{0, 0, 1, 2}}).feasible);
  EXPECT_EQ(quality(inst, Coloring{{0, 1}}).quality, 0.0);
}

TEST(Quality, MaxSat) {
  CnfFormula f;
  f.numVars = 2;
  f.clauses = {{1, 2}, {-1}, {-2}};
  auto inst = make(ProblemClass::kMaxSat, f, 2);
  EXPECT_TRUE(quality(inst, Assignment{{false, false}}).optimal);
  auto both = quality(inst, Assignment{{true, true}});
  EXPECT_EQ(both.rawObjective, 1.0);
  EXPECT_EQ(both.quality, 0.5);
}

TEST(Quality, Mis) {
  auto inst = make(ProblemClass::kMis, Graph::fromEdges(3, {{0, 1}, {1, 2}}), 2);
  EXPECT_EQ(quality(inst, VertexSet{{1}}).quality, 0.5);
  EXPECT_TRUE(quality(inst, VertexSet{{0, 2}}).optimal);
  EXPECT_FALSE(quality(inst, VertexSet{{0, 1}}).feasible);
}

TEST(Quality, Mds) {
  auto inst = make(ProblemClass::kMds, Graph::fromEdges(4, {{0, 1}, {0, 2}, {0, 3}}), 1);
  EXPECT_TRUE(quality(inst, VertexSet{{0}}).optimal);
  EXPECT_EQ(quality(inst, VertexSet{{1, 2, 3}}).quality, 1.0 / 3.0);
  EXPECT_FALSE(quality(inst, VertexSet{{1}}).feasible);
}

TEST(Quality, PackingLp) {
  PackingLpInstance lp;
  static_cast<PackingTable&>(lp) = table();
  auto inst = make(ProblemClass::kPackingLp, lp, 3);
  auto half = quality(inst, ItemFractions{{0.5, 0.5}});
  EXPECT_NEAR(half.quality, 2.5 / 3.0, 1e-12);
  EXPECT_FALSE(half.optimal);
  EXPECT_TRUE(quality(inst, ItemFractions{{1, 0}}).optimal);
  // Within relative 1e-9 of the optimum counts as optimal.
  EXPECT_TRUE(quality(inst, ItemFractions{{1 - 1e-10, 0}}).optimal);
  EXPECT_FALSE(quality(inst, ItemFractions{{1, 1}}).feasible);
}

TEST(Quality, Mdkp) {
  MdkpInstance kp;
  static_cast<PackingTable&>(kp) = table();
  auto inst = make(ProblemClass::kMdkp, kp, 3);
  EXPECT_EQ(quality(inst, ItemPicks{{false, true}}).quality, 2.0 / 3.0);
  EXPECT_TRUE(quality(inst, ItemPicks{{true, false}}).optimal);
  EXPECT_FALSE(quality(inst, ItemPicks{{true, true}}).feasible);
}

TEST(Quality, Tsp) {
  TspInstance t{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  auto inst = make(ProblemClass::kTsp, t, 4);
  EXPECT_TRUE(quality(inst, Tour{{0, 1, 2, 3}}).optimal);
  auto crossed = quality(inst, Tour{{0, 2, 1, 3}});
  EXPECT_NEAR(crossed.rawObjective, 2 + 2 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(crossed.quality, 4 / (2 + 2 * std::sqrt(2.0)), 1e-12);
  EXPECT_FALSE(quality(inst, Tour{{0, 1, 2}}).feasible);
  EXPECT_FALSE(quality(inst, Tour{{0, 1, 1, 3}}).feasible);
}

TEST(Quality, BeatingCertifiedOptimumIsAnError) {
  auto inst = make(ProblemClass::kMis, Graph::fromEdges(3, {{0, 1}}), 1);
  EXPECT_THROW(quality(inst, VertexSet{{0, 2}}), Error);
  inst.eval.certified = false;
  EXPECT_EQ(quality(inst, VertexSet{{0, 2}}).quality, 1.0);
}

TEST(Quality, OptimalityRate) {
  std::vector<ScoredResult> rs(4);
  rs[1].optimal = rs[3].optimal = true;
  EXPECT_EQ(optimalityRate(rs), 0.5);
  EXPECT_THROW(optimalityRate(std::vector<ScoredResult>{}), Error);
}

}  // namespace
}  // namespace hintforge
