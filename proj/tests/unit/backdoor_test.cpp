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
#include <cmath>

#include <gtest/gtest.h>

#include "hintforge/backdoor.hpp"
#include "hintforge/error.hpp"
#include "hintforge/generators.hpp"
#include "hintforge/rng.hpp"

namespace hintforge {
namespace {

CnfFormula cnf(int n, std::vector<std::vector<int>> clauses) {
  CnfFormula f;
  f.numVars = n;
  f.clauses = std::move(clauses);
  return f;
}

TEST(Salience, CountsPositiveOccurrencesInNonHornClauses) {
  // Clauses 1 and 2 are non-Horn; clause 3 is Horn.
  auto f = cnf(3, {{1, 2}, {1, 3, -2}, {-1, 2}, {-3}});
  auto s = salienceVector(f);
  EXPECT_DOUBLE_EQ(s[0], 2.0 / 4);
  EXPECT_DOUBLE_EQ(s[1], 1.0 / 4);
  EXPECT_DOUBLE_EQ(s[2], 1.0 / 4);
  EXPECT_DOUBLE_EQ(salience(f, 1), 0.25);
  EXPECT_THROW(salience(f, 3), Error);
  EXPECT_THROW(salienceVector(cnf(2, {})), Error);
}

TEST(Salience, HornFormulaIsFlat) {
  auto s = salienceVector(cnf(2, {{-1, 2}, {1}, {-2}}));
  EXPECT_EQ(s, (std::vector<double>{0, 0}));
}

TEST(TopK, TiesGoToSmallerIndex) {
  std::vector<double> s{0.2, 0.5, 0.5, 0.1, 0.5};
  EXPECT_EQ(topK(s, 2), (std::vector<int>{1, 2}));
  EXPECT_EQ(topK(s, 4), (std::vector<int>{0, 1, 2, 4}));
  EXPECT_TRUE(topK(s, 0).empty());
  EXPECT_THROW(topK(s, 6), Error);
}

TEST(SampleSize, FrozenValues) {
  EXPECT_NEAR(backdoorMargin(12, 2, 0.5), 0.2, 1e-15);
  EXPECT_EQ(backdoorSampleSize(12, 2, 0.5, 0.05), 1235);
  EXPECT_EQ(backdoorSampleSize(12, 2, 0.25, 0.05), 4940);
  EXPECT_EQ(backdoorSampleSize(40, 3, 0.5, 0.05), 2517);
  EXPECT_THROW(backdoorMargin(4, 2, 0.5), Error);
  EXPECT_THROW(backdoorMargin(12, 0, 0.5), Error);
  EXPECT_THROW(backdoorSampleSize(12, 2, 0.5, 1.0), Error);
}

TEST(PlantedFamily, MeanSalienceMatchesRhoOverK) {
  HornBackdoorParams p;
  auto fs = sampleHornBackdoorFamily(p, 400, 17);
  std::vector<CnfFormula> formulas;
  for (const auto& f : fs) {
    EXPECT_EQ(f.backdoor, fs.front().backdoor);
    EXPECT_TRUE(isStrongHornBackdoor(f.formula, f.backdoor));
    formulas.push_back(f.formula);
  }
  auto prof = estimateSalience(formulas);
  EXPECT_EQ(prof.m, 400);
  for (int v = 0; v < p.d; ++v) {
    bool in = std::find(fs[0].backdoor.begin(), fs[0].backdoor.end(), v) != fs[0].backdoor.end();
    double expected = in ? p.rho / p.k : 0.0;
    // Salience of an off-backdoor variable is bounded by rho/(d-k).
    if (in) {
      EXPECT_NEAR(prof.sigmaHat[v], expected, 0.03) << v;
    } else {
      EXPECT_LE(prof.sigmaHat[v], p.rho / (p.d - p.k) + 0.03) << v;
    }
  }
  EXPECT_EQ(recoverBackdoor(formulas, p.k), fs[0].backdoor);
}

TEST(PlantedFamily, RejectsWideBackdoor) {
  HornBackdoorParams p;
  p.d = 8;
  p.k = 4;
  EXPECT_THROW(p.validate(), Error);
}

TEST(CompiledSolver, ValidatesBackdoor) {
  auto f = cnf(3, {{1, 2, 3}});
  EXPECT_THROW(solveWithBackdoor({{0, 0}}, f), Error);
  EXPECT_THROW(solveWithBackdoor({{3}}, f), Error);
  EXPECT_THROW(solveWithBackdoor({{0}, "cdcl"}, f), Error);
  std::vector<int> huge(21);
  for (int i = 0; i < 21; ++i) huge[i] = i;
  try {
    solveWithBackdoor({huge}, cnf(30, {{1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(CompiledSolver, HornResidualTakesShortcut) {
  // {x1} is a strong Horn backdoor of (x1 v x2 v ~x3)(~x1 v ~x2)(x3).
  auto f = cnf(3, {{1, 2, -3}, {-1, -2}, {3}});
  auto r = solveWithBackdoor({{0}}, f);
  ASSERT_TRUE(r.result.satisfiable);
  EXPECT_TRUE(satisfies(f, r.result.assignment));
  EXPECT_TRUE(r.trace.shortcutUsed);
  EXPECT_FALSE(r.trace.fallbackUsed);
  // Branch x1=false leaves (x2 v ~x3)(x3): x2 forced true.
  EXPECT_EQ(r.branchesTried, 1);
  EXPECT_EQ(r.trace.repairIterations, 0);
}

TEST(CompiledSolver, NonHornResidualFallsBack) {
  auto f = cnf(3, {{1, 2, 3}, {-1}});
  auto r = solveWithBackdoor({{0}}, f);
  ASSERT_TRUE(r.result.satisfiable);
  EXPECT_TRUE(r.trace.fallbackUsed);
  EXPECT_FALSE(r.trace.shortcutUsed);
}

TEST(CompiledSolver, EmptyBackdoorIsPlainSolve) {
  auto f = cnf(2, {{1}, {-1}});
  auto r = solveWithBackdoor({}, f);
  EXPECT_FALSE(r.result.satisfiable);
  EXPECT_EQ(r.branchesTried, 1);
}

TEST(CompiledSolver, VerdictMatchesDpll) {
  CounterRng rng(33);
  for (int t = 0; t < 200; ++t) {
    int n = 3 + static_cast<int>(rng.below(10));
    CnfFormula f;
    f.numVars = n;
    int m = static_cast<int>(rng.between(n, 5 * n));
    for (int c = 0; c < m; ++c) {
      auto vars = rng.sample(n, 1 + static_cast<int>(rng.below(3)));
      std::vector<int> clause;
      for (int v : vars) clause.push_back(rng.bernoulli(0.4) ? v + 1 : -(v + 1));
      f.clauses.push_back(clause);
    }
    auto b = rng.sample(n, static_cast<int>(rng.below(std::min(n, 5) + 1)));
    auto r = solveWithBackdoor({b}, f);
    auto d = dpll(f);
    ASSERT_EQ(r.result.satisfiable, d.satisfiable) << t;
    if (d.satisfiable) {
      ASSERT_TRUE(satisfies(f, r.result.assignment)) << t;
    }
  }
}

}  // namespace
}  // namespace hintforge
