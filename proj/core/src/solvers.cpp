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

#include "hintforge/solvers.hpp"

#include <chrono>

#include "hintforge/baselines.hpp"
#include "hintforge/error.hpp"
#include "hintforge/rng.hpp"

namespace hintforge {

namespace b = baselines;
using nlohmann::json;

double steadyNowMs() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

RunMeasurement runMeasured(const MeasuredSolver& solver, const Instance& inst,
                           const RunOptions& options) {
  require(solver.problemClass == inst.problemClass(), ErrorCode::kUnsupportedClass,
          "solver '" + solver.id + "' is for " + std::string(toString(solver.problemClass)) +
              " but instance " + inst.id() + " is " +
              std::string(toString(inst.problemClass())));
  const ClockMs& clock = options.clock ? options.clock : ClockMs(steadyNowMs);
  RunMeasurement m;
  SolveOutput out;
  double start = clock();
  try {
    out = solver.solve(inst.pub, options.seed);
    m.wallClockMs = std::max(0.0, clock() - start);
  } catch (const std::exception& e) {
    m.crashed = true;
    m.error = e.what();
  } catch (...) {
    m.crashed = true;
    m.error = "unknown exception";
  }
  if (m.crashed) {
    m.wallClockMs = options.failureRuntimeMs;
    return m;
  }
  m.scored = quality(inst, out.solution);
  m.trace = out.trace;
  if (options.keepSolution) m.solution = std::move(out.solution);
  return m;
}

std::uint64_t solverSeed(std::uint64_t datasetSeed, std::string_view solverId,
                         std::string_view instanceId) {
  return CounterRng::derive(datasetSeed, solverId, instanceId).next();
}

namespace {

using PC = ProblemClass;

MeasuredSolver make(std::string id, PC c, SolveFn fn, json config = json::object()) {
  return MeasuredSolver{std::move(id), c, std::move(fn), 1.0, std::move(config)};
}

template <class S>
SolveOutput plain(S s) {
  return SolveOutput{Solution{std::move(s)}, {}};
}

template <class S>
SolveOutput traced(b::Output<S> o) {
  return SolveOutput{Solution{std::move(o.solution)}, o.trace};
}

std::vector<MeasuredSolver> buildCatalog(PC c) {
  std::vector<MeasuredSolver> out;
  switch (c) {
    case PC::kColoring:
      out.push_back(make("dsatur", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::dsatur(x.graph()));
      }));
      out.push_back(make("greedy-largest-first", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::greedyColoring(x.graph(), b::largestFirstOrder(x.graph())));
      }));
      out.push_back(make("greedy-random-order", c, [](const PublicInstance& x, std::uint64_t s) {
        CounterRng rng(s);
        return plain(b::greedyColoring(x.graph(), rng.permutation(x.graph().n)));
      }));
      out.push_back(make("greedy-smallest-last", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::greedyColoring(x.graph(), b::smallestLastOrder(x.graph())));
      }));
      break;
    case PC::kMaxSat:
      out.push_back(make(
          "greedy-flip-local-search", c,
          [](const PublicInstance& x, std::uint64_t) {
            return traced(b::greedyFlipSearch(x.formula(), 1000));
          },
          {{"maxFlips", 1000}}));
      out.push_back(make("literal-majority", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::literalMajority(x.formula()));
      }));
      out.push_back(make("random-assignment", c, [](const PublicInstance& x, std::uint64_t s) {
        CounterRng rng(s);
        return plain(b::randomAssignment(x.formula(), rng));
      }));
      break;
    case PC::kMis:
      out.push_back(make("min-degree-greedy", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::minDegreeGreedy(x.graph()));
      }));
      out.push_back(make("random-greedy", c, [](const PublicInstance& x, std::uint64_t s) {
        CounterRng rng(s);
        return plain(b::randomGreedyIndependent(x.graph(), rng));
      }));
      out.push_back(make("ratio-greedy", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::ratioGreedyIndependent(x.graph()));
      }));
      out.push_back(make(
          "local-improvement", c,
          [](const PublicInstance& x, std::uint64_t) {
            return traced(b::independentLocalImprovement(x.graph(), 10000));
          },
          {{"maxSwaps", 10000}}));
      break;
    case PC::kMds:
      out.push_back(make("high-degree-greedy", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::highDegreeGreedy(x.graph()));
      }));
      out.push_back(make("marginal-gain-greedy", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::marginalGainGreedy(x.graph()));
      }));
      out.push_back(make("redundancy-aware-greedy", c,
                         [](const PublicInstance& x, std::uint64_t) {
                           return traced(b::redundancyAwareGreedy(x.graph()));
                         }));
      break;
    case PC::kPackingLp:
      out.push_back(make("density-greedy", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::densityFill(x.packingLp()));
      }));
      out.push_back(make("uniform-fraction", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::uniformFraction(x.packingLp()));
      }));
      break;
    case PC::kMdkp:
      out.push_back(make("value-density-greedy", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::densityGreedyPicks(x.mdkp()));
      }));
      out.push_back(make(
          "redundancy-improved-greedy", c,
          [](const PublicInstance& x, std::uint64_t) {
            return traced(b::redundancyImprovedGreedy(x.mdkp(), 200));
          },
          {{"maxMoves", 200}}));
      out.push_back(make(
          "lp-rounding", c,
          [](const PublicInstance& x, std::uint64_t) {
            return traced(b::lpRounding(x.mdkp(), 2.0));
          },
          {{"lpSeconds", 2.0}}));
      break;
    case PC::kTsp:
      out.push_back(make("random-tour", c, [](const PublicInstance& x, std::uint64_t s) {
        CounterRng rng(s);
        return plain(b::randomTour(x.tsp(), rng));
      }));
      out.push_back(make("nearest-neighbor", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::nearestNeighbor(x.tsp()));
      }));
      out.push_back(make("nearest-insertion", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::nearestInsertion(x.tsp()));
      }));
      out.push_back(make("farthest-insertion", c, [](const PublicInstance& x, std::uint64_t) {
        return plain(b::farthestInsertion(x.tsp()));
      }));
      out.push_back(twoOptSolver(8, 10000));
      out.push_back(make(
          "nn-2opt", c,
          [](const PublicInstance& x, std::uint64_t) {
            return traced(b::twoOpt(x.tsp(), b::nearestNeighbor(x.tsp()), 10000));
          },
          {{"maxPasses", 10000}}));
      out.push_back(make(
          "farthest-insertion-2opt", c,
          [](const PublicInstance& x, std::uint64_t) {
            return traced(b::twoOpt(x.tsp(), b::farthestInsertion(x.tsp()), 10000));
          },
          {{"maxPasses", 10000}}));
      break;
  }
  return out;
}

}  // namespace

MeasuredSolver twoOptSolver(int starts, int maxPasses) {
  require(starts >= 1 && maxPasses >= 0, ErrorCode::kInvalidArgument,
          "2-opt budgets must be positive");
  return make(
      "multistart-2opt", PC::kTsp,
      [starts, maxPasses](const PublicInstance& x, std::uint64_t s) {
        CounterRng rng(s);
        return traced(b::multiStartTwoOpt(x.tsp(), starts, maxPasses, rng));
      },
      {{"starts", starts}, {"maxPasses", maxPasses}});
}

void assignUniformPriors(std::vector<MeasuredSolver>& library) {
  for (auto& s : library) s.prior = 1.0 / static_cast<double>(library.size());
}

std::vector<MeasuredSolver> catalog(ProblemClass c) {
  auto out = buildCatalog(c);
  assignUniformPriors(out);
  return out;
}

MeasuredSolver exactSolver(ProblemClass c, const OracleBudget& budget) {
  return make(
      "exact", c,
      [budget](const PublicInstance& x, std::uint64_t) {
        return SolveOutput{solveExact(x, budget).solution, {}};
      },
      {{"maxSeconds", budget.maxSeconds}, {"maxStates", budget.maxStates}});
}

MeasuredSolver findSolver(ProblemClass c, std::string_view id) {
  if (id == "exact") return exactSolver(c);
  for (auto& s : catalog(c))
    if (s.id == id) return s;
  throw Error(ErrorCode::kNotFound, "no solver '" + std::string(id) + "' for class " +
                                        std::string(toString(c)));
}

std::vector<std::string> solverIds(ProblemClass c) {
  std::vector<std::string> out;
  for (const auto& s : catalog(c)) out.push_back(s.id);
  out.push_back("exact");
  return out;
}

}  // namespace hintforge
