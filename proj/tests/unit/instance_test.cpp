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

#include <gtest/gtest.h>

#include "hintforge/error.hpp"
#include "hintforge/generators.hpp"
#include "hintforge/serialize.hpp"
#include "hintforge/verify.hpp"

namespace hintforge {
namespace {

TEST(Graph, FromEdgesCanonicalizes) {
  Graph g = Graph::fromEdges(4, {{2, 1}, {1, 2}, {3, 0}});
  ASSERT_EQ(g.numEdges(), 2U);
  EXPECT_EQ(g.edges[0], (std::pair<int, int>{0, 3}));
  EXPECT_EQ(g.edges[1], (std::pair<int, int>{1, 2}));
  EXPECT_EQ(g.degrees(), (std::vector<int>{1, 1, 1, 1}));
}

TEST(Graph, PermuteMapsNewToOld) {
  // New vertex i is old vertex perm[i].
  Graph g = Graph::fromEdges(3, {{0, 1}});
  Graph h = permuteGraph(g, {2, 0, 1});
  // Old 0 is new 1, old 1 is new 2.
  ASSERT_EQ(h.numEdges(), 1U);
  EXPECT_EQ(h.edges[0], (std::pair<int, int>{1, 2}));
}

TEST(Serialize, EveryFamilyRoundTrips) {
  for (const auto& fam : familyRegistry()) {
    FamilySpec spec{fam.problemClass, fam.name, SizeProfile::kDesk, {}, 9};
    Instance inst = generateInstance(spec, "train", 0);
    auto j = toJson(inst);
    Instance back = instanceFromJson(j);
    EXPECT_EQ(back, inst) << fam.name;
    EXPECT_EQ(canonicalDump(toJson(back)), canonicalDump(j)) << fam.name;
  }
}

TEST(Serialize, PublicFormHasNoEvaluatorFields) {
  FamilySpec spec{ProblemClass::kMis, "core-fringe", SizeProfile::kDesk, {}, 1};
  Instance inst = generateInstance(spec, "val", 3);
  auto j = toJson(stripToPublic(inst));
  EXPECT_FALSE(j.contains("evaluator"));
  EXPECT_EQ(publicFromJson(j), inst.pub);
}

TEST(Serialize, DimacsRoundTrip) {
  CnfFormula f;
  f.numVars = 4;
  f.clauses = {{1, -2}, {3}, {-1, -3, 4}};
  EXPECT_EQ(fromDimacs(toDimacs(f)), f);
  CnfFormula g = fromDimacs("c comment\np cnf 3 2\n1 -3 0\n2\n3 0\n");
  ASSERT_EQ(g.numVars, 3);
  EXPECT_EQ(g.clauses, (std::vector<std::vector<int>>{{1, -3}, {2, 3}}));
}

TEST(Relabel, KeepsOptimumAndMapsSolution) {
  for (const char* name : {"ring-template", "core-fringe", "star-kernel"}) {
    const auto& fam = familyRegistry();
    auto it = std::find_if(fam.begin(), fam.end(), [&](const FamilyInfo& f) { return f.name == name; });
    ASSERT_NE(it, fam.end());
    FamilySpec spec{it->problemClass, name, SizeProfile::kDesk, {}, 4};
    Instance inst = generateInstance(spec, "test", 1);
    auto rel = relabelGraph(inst, 99);
    EXPECT_EQ(rel.instance.eval.optimumValue, inst.eval.optimumValue);
    ASSERT_TRUE(rel.instance.eval.optimumSolution.has_value());
    auto s = quality(rel.instance, *rel.instance.eval.optimumSolution);
    EXPECT_TRUE(s.feasible) << name;
    EXPECT_TRUE(s.optimal) << name;
    EXPECT_EQ(rel.instance.pub.graph().numEdges(), inst.pub.graph().numEdges());
  }
}

TEST(Relabel, RejectsNonGraphClass) {
  FamilySpec spec{ProblemClass::kTsp, "latent-metric", SizeProfile::kDesk, {}, 4};
  Instance inst = generateInstance(spec, "test", 0);
  EXPECT_THROW(relabelGraph(inst, 1), Error);
}

}  // namespace
}  // namespace hintforge
