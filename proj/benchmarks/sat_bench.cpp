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

#include <benchmark/benchmark.h>

#include "hintforge/backdoor.hpp"
#include "hintforge/generators.hpp"
#include "hintforge/sat.hpp"

namespace hintforge {
namespace {

std::vector<HornBackdoorFormula> family(int d, int k) {
  HornBackdoorParams p;
  p.d = d;
  p.k = k;
  p.numClauses = 4 * d;
  return sampleHornBackdoorFamily(p, 64, 3);
}

void BM_Dpll(benchmark::State& state) {
  auto fs = family(static_cast<int>(state.range(0)), 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dpll(fs[i++ % fs.size()].formula));
}
BENCHMARK(BM_Dpll)->Arg(20)->Arg(40)->Arg(80);

void BM_BackdoorSolve(benchmark::State& state) {
  auto fs = family(static_cast<int>(state.range(0)), 3);
  CompiledBackdoorSolver solver{fs.front().backdoor};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solveWithBackdoor(solver, fs[i++ % fs.size()].formula));
}
BENCHMARK(BM_BackdoorSolve)->Arg(20)->Arg(40)->Arg(80);

void BM_HornSat(benchmark::State& state) {
  auto fs = family(static_cast<int>(state.range(0)), 3);
  std::vector<CnfFormula> horn;
  for (const auto& f : fs) {
    CnfFormula h;
    h.numVars = f.formula.numVars;
    for (const auto& c : f.formula.clauses)
      if (isHornClause(c)) h.clauses.push_back(c);
    horn.push_back(std::move(h));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hornSat(horn[i++ % horn.size()]));
}
BENCHMARK(BM_HornSat)->Arg(40)->Arg(400);

void BM_Salience(benchmark::State& state) {
  auto fs = family(40, 3);
  std::vector<CnfFormula> sample;
  for (const auto& f : fs) sample.push_back(f.formula);
  for (auto _ : state) benchmark::DoNotOptimize(recoverBackdoor(sample, 3));
}
BENCHMARK(BM_Salience);

}  // namespace
}  // namespace hintforge

BENCHMARK_MAIN();
