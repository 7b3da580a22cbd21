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
#include "hintforge/generators.hpp"
#include "hintforge/harness.hpp"

namespace hintforge {
namespace {

RunRecord rec(std::string target, std::string solver, SolverRole role, std::string inst,
              double q, double ms, bool optimal = false) {
  RunRecord r;
  r.target = std::move(target);
  r.family = "mis";
  r.solverId = std::move(solver);
  r.role = role;
  r.instanceId = std::move(inst);
  r.quality = q;
  r.feasible = q > 0;
  r.optimal = optimal;
  r.runtimeMs = ms;
  return r;
}

TEST(Means, ArithmeticAndGeometric) {
  std::vector<double> xs{2, 8};
  EXPECT_DOUBLE_EQ(arithmeticMean(xs), 5);
  EXPECT_NEAR(geometricMean(xs), 4, 1e-12);
  std::vector<double> none, bad{1, 0};
  EXPECT_THROW(arithmeticMean(none), Error);
  EXPECT_THROW(geometricMean(none), Error);
  EXPECT_THROW(geometricMean(bad), Error);
}

TEST(Summaries, ClipAppliesToHeuristicsOnly) {
  using R = SolverRole;
  std::vector<RunRecord> rs{
      rec("mis/t", "method:m", R::kMethod, "a", 1.0, 12000, true),
      rec("mis/t", "h1", R::kHeuristic, "a", 0.5, 12000),
      rec("mis/t", "h2", R::kHeuristic, "a", 0.8, 100),
      rec("mis/t", "exact", R::kExact, "a", 1.0, 30000, true),
  };
  BenchConfig cfg;
  cfg.repeats = 1;
  auto rep = summarizeRecords(rs, cfg);
  ASSERT_EQ(rep.targets.size(), 1U);
  const auto& t = rep.targets[0];
  EXPECT_EQ(t.heuristics[0].meanRuntimeMs, 10000);
  EXPECT_EQ(t.heuristics[0].rawMeanRuntimeMs, 12000);
  EXPECT_EQ(t.method.meanRuntimeMs, 12000);
  EXPECT_EQ(t.exact->meanRuntimeMs, 30000);
  EXPECT_EQ(t.bestHeuristicId, "h2");
  EXPECT_DOUBLE_EQ(t.avgHeuristicQuality, 0.65);
  EXPECT_DOUBLE_EQ(t.avgHeuristicRuntimeMs, 5050);
  EXPECT_DOUBLE_EQ(t.deltaQAvg, 0.35);
  EXPECT_NEAR(t.deltaQBest, 0.2, 1e-15);
  EXPECT_DOUBLE_EQ(t.speedupVsBest, 100.0 / 12000);
  EXPECT_DOUBLE_EQ(t.speedupVsAvg, 5050.0 / 12000);
  EXPECT_DOUBLE_EQ(*t.speedupVsExact, 2.5);
}

TEST(Summaries, BestHeuristicTieBreaks) {
  using R = SolverRole;
  std::vector<RunRecord> rs{
      rec("mis/t", "method:m", R::kMethod, "a", 1.0, 1),
      rec("mis/t", "z", R::kHeuristic, "a", 0.8, 50, true),
      rec("mis/t", "y", R::kHeuristic, "a", 0.8, 50, true),
      rec("mis/t", "x", R::kHeuristic, "a", 0.8, 60, true),
      rec("mis/t", "w", R::kHeuristic, "a", 0.8, 10, false),
  };
  auto rep = summarizeRecords(rs, {});
  // Same Q; optimality beats runtime; runtime beats id.
  EXPECT_EQ(rep.targets[0].bestHeuristicId, "y");
}

TEST(Summaries, AggregateIdentities) {
  using R = SolverRole;
  std::vector<RunRecord> rs;
  double mq[] = {0.9, 0.6}, mt[] = {2, 8}, hq[] = {0.5, 0.4}, ht[] = {4, 4};
  for (int i = 0; i < 2; ++i) {
    std::string t = "mis/t" + std::to_string(i);
    rs.push_back(rec(t, "method:m", R::kMethod, "a", mq[i], mt[i]));
    rs.push_back(rec(t, "h", R::kHeuristic, "a", hq[i], ht[i]));
  }
  auto rep = summarizeRecords(rs, {});
  EXPECT_DOUBLE_EQ(rep.aggregate.meanQuality, 0.75);
  EXPECT_NEAR(rep.aggregate.meanDeltaQAvg, 0.3, 1e-12);
  EXPECT_NEAR(rep.aggregate.geoMeanRuntimeMs, 4, 1e-12);
  EXPECT_NEAR(rep.aggregate.geoSpeedupVsBest, std::sqrt(2.0 * 0.5), 1e-12);
  EXPECT_FALSE(rep.aggregate.geoSpeedupVsExact.has_value());
  EXPECT_EQ(rep.targets[0].name, "mis/t0");
  // Zero runtimes are floored before ratios.
  rs[0].runtimeMs = 0;
  auto floored = summarizeRecords(rs, {});
  EXPECT_DOUBLE_EQ(floored.targets[0].speedupVsBest, 4 / kRuntimeFloorMs);
}

TEST(Summaries, RejectsMalformedRecords) {
  using R = SolverRole;
  std::vector<RunRecord> noMethod{rec("mis/t", "h", R::kHeuristic, "a", 1, 1)};
  EXPECT_THROW(summarizeRecords(noMethod, {}), Error);
  std::vector<RunRecord> noHeur{rec("mis/t", "method:m", R::kMethod, "a", 1, 1)};
  EXPECT_THROW(summarizeRecords(noHeur, {}), Error);
}

TEST(Diagnostics, TwoLevelDiffersFromFlat) {
  DiagnosticTrace on, off;
  on.shortcutUsed = true;
  std::vector<TraceGroup> groups{
      {"mis", "mis/a", {on, on, on, on}},
      {"mis", "mis/b", {off, off, off, off, off, off, off, off, off, off, off, off}},
      {"tsp", "tsp/c", {on}},
  };
  auto d = aggregateDiagnostics(groups);
  EXPECT_EQ(d.perTarget.at("mis/b").n, 12);
  EXPECT_DOUBLE_EQ(d.perTarget.at("mis/a").shortcutRate, 1);
  EXPECT_DOUBLE_EQ(d.perFamily.at("mis").shortcutRate, 0.5);
  EXPECT_DOUBLE_EQ(d.overall.shortcutRate, 2.0 / 3);
  // Pooling the 17 traces would give 5/17 instead.
  EXPECT_NE(d.overall.shortcutRate, 5.0 / 17);
}

TEST(Config, Validation) {
  BenchConfig cfg;
  cfg.repeats = 0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.clipMs = -1;
  EXPECT_THROW(cfg.validate(), Error);
}

Instance misInstance(int i) {
  FamilySpec spec{ProblemClass::kMis, "core-fringe", SizeProfile::kDesk, {}, 2};
  return generateInstance(spec, "test", i);
}

TEST(Benchmark, RunsWithInjectedClock) {
  BenchTarget t;
  t.name = "mis/core-fringe";
  t.problemClass = ProblemClass::kMis;
  t.test = {misInstance(0), misInstance(1)};
  t.heuristics = catalog(ProblemClass::kMis);
  t.method = exactSolver(ProblemClass::kMis);
  t.method.id = "method:exact";
  BenchConfig cfg;
  cfg.repeats = 2;
  cfg.clock = [n = 0.0]() mutable { return n += 0.5; };
  auto rep = runBenchmark(std::span<const BenchTarget>(&t, 1), cfg);
  EXPECT_EQ(rep.records.size(), (1 + t.heuristics.size()) * 2 * 2);
  EXPECT_EQ(rep.targets[0].method.meanQuality, 1.0);
  EXPECT_EQ(rep.targets[0].method.optimalityRate, 1.0);
  auto again = summarizeRecords(rep.records, cfg);
  EXPECT_EQ(toJson(again), toJson(rep));
  auto csv = toCsv(rep);
  EXPECT_EQ(csv.rfind("target,method,Q,O,F,T_ms", 0), 0U);
}

TEST(Benchmark, Errors) {
  BenchTarget t;
  t.name = "mis/core-fringe";
  t.problemClass = ProblemClass::kMis;
  t.heuristics = catalog(ProblemClass::kMis);
  t.method = exactSolver(ProblemClass::kMis);
  EXPECT_THROW(runBenchmark(std::span<const BenchTarget>(&t, 1), {}), Error);
  t.test = {misInstance(0)};
  t.problemClass = ProblemClass::kMds;
  try {
    runBenchmark(std::span<const BenchTarget>(&t, 1), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedClass);
  }
}

TEST(Perturbation, ExactSolverIsInvariant) {
  std::vector<Instance> test{misInstance(0), misInstance(1), misInstance(2)};
  PerturbationConfig cfg;
  cfg.clock = [n = 0.0]() mutable { return n += 1.0; };
  auto r = runPerturbationAblation("mis/core-fringe", test, exactSolver(ProblemClass::kMis), cfg);
  EXPECT_EQ(r.n, 3);
  EXPECT_EQ(r.deltaQ, 0.0);
  EXPECT_EQ(r.qualityChanged, 0.0);
  EXPECT_EQ(r.feasibilityChanged, 0.0);
  EXPECT_DOUBLE_EQ(r.runtimeRatio, 1.0);
}

TEST(Perturbation, GraphClassesOnly) {
  FamilySpec spec{ProblemClass::kTsp, "latent-metric", SizeProfile::kDesk, {}, 2};
  std::vector<Instance> test{generateInstance(spec, "test", 0)};
  EXPECT_THROW(runPerturbationAblation("tsp/latent-metric", test,
                                       findSolver(ProblemClass::kTsp, "nearest-neighbor"), {}),
               Error);
}

}  // namespace
}  // namespace hintforge
