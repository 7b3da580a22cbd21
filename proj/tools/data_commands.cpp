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

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hintforge/backdoor.hpp"
#include "hintforge/dataset.hpp"
#include "hintforge/erm.hpp"
#include "hintforge/error.hpp"
#include "hintforge/sat.hpp"
#include "hintforge/serialize.hpp"
#include "hintforge/solvers.hpp"
#include "hintforge/verify.hpp"

namespace hintforge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GenerateArgs {
  std::string targets = "all";
  std::string profile = "desk";
  std::uint64_t seed = 0;
  SplitSpec split;
  int threads = 0;
  std::string out;
  bool noCertify = false;
};

void runGenerate(const GenerateArgs& a) {
  auto families = parseTargets(a.targets);
  for (const auto& fam : families) {
    FamilySpec spec{fam.problemClass, fam.name, parseSizeProfile(a.profile), json::object(),
                    a.seed};
    GenerateOptions opt;
    opt.threads = a.threads;
    opt.certify = !a.noCertify;
    auto t0 = std::chrono::steady_clock::now();
    TargetDataset ds = generateTarget(spec, a.split, opt);
    fs::path dir = families.size() == 1 ? fs::path(a.out)
                                        : fs::path(a.out) / toString(fam.problemClass) / fam.name;
    writeDataset(dir, ds);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%-32s %4zu/%3zu/%4zu  hash %s  %.2fs  -> %s\n", ds.targetName().c_str(),
                ds.train.size(), ds.val.size(), ds.test.size(), ds.specHash.c_str(), secs,
                dir.string().c_str());
  }
}

struct OracleArgs {
  std::string instance;
  double seconds = 60;
};

void runOracle(const OracleArgs& a) {
  Instance inst = readInstanceFile(a.instance);
  OracleBudget budget;
  budget.maxSeconds = a.seconds;
  auto t0 = std::chrono::steady_clock::now();
  ExactAnswer ans = solveExact(inst.pub, budget);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  ScoredResult s = quality(inst, ans.solution);
  json out = {{"instance", inst.id()},
              {"oracleValue", ans.value},
              {"storedOptimum", inst.eval.optimumValue},
              {"matches", s.optimal},
              {"runtimeMs", ms},
              {"solution", toJson(ans.solution)}};
  std::cout << out.dump(2) << '\n';
  if (!s.feasible || !s.optimal)
    throw InvariantViolation("oracle optimum disagrees with the stored optimum of " + inst.id());
}

struct SolveArgs {
  std::string instance;
  std::string solver;
  std::uint64_t seed = 0;
  std::string out;
};

void runSolve(const SolveArgs& a) {
  Instance inst = readInstanceFile(a.instance);
  MeasuredSolver s = findSolver(inst.problemClass(), a.solver);
  RunOptions ro;
  ro.seed = solverSeed(a.seed, s.id, inst.id());
  ro.keepSolution = true;
  RunMeasurement m = runMeasured(s, inst, ro);
  json out = {{"instance", inst.id()},
              {"solver", s.id},
              {"config", s.config},
              {"crashed", m.crashed},
              {"error", m.error},
              {"runtimeMs", m.wallClockMs},
              {"feasible", m.scored.feasible},
              {"objective", m.scored.rawObjective},
              {"quality", m.scored.quality},
              {"optimal", m.scored.optimal},
              {"trace", toJson(m.trace)},
              {"solution", m.solution ? toJson(*m.solution) : json()}};
  emitJson(out, a.out);
  if (!m.crashed && (m.scored.quality < 0 || m.scored.quality > 1))
    throw InvariantViolation("quality outside [0, 1]");
}

struct SelectArgs {
  std::string dataset;
  std::string split = "train";
  std::string library = "catalog+exact";
  ErmConfig erm;
  std::string out;
};

void runSelect(SelectArgs a) {
  require(a.split != "test", ErrorCode::kInvalidArgument, "selection never reads the test split");
  DatasetManifest man = readManifest(a.dataset);
  std::vector<Instance> sample = loadSplit(a.dataset, a.split);
  std::vector<MeasuredSolver> lib = catalog(man.spec.problemClass);
  if (a.library == "catalog+exact")
    lib.push_back(exactSolver(man.spec.problemClass));
  else
    require(a.library == "catalog", ErrorCode::kInvalidArgument,
            "library must be catalog or catalog+exact");
  assignUniformPriors(lib);
  ErmSelection sel = selectErm(lib, sample, a.erm);
  json out = toJson(sel);
  out["target"] = man.targetName();
  out["split"] = a.split;
  out["delta"] = a.erm.delta;
  out["tMaxMs"] = a.erm.tMaxMs;
  out["requireOptimal"] = a.erm.requireOptimal;
  emitJson(out, a.out);
}

struct BackdoorArgs {
  std::string dataset;
  std::vector<std::string> dimacs;
  int k = 2;
  double delta = 0.05;
  std::string exportDir;
  int timingLimit = 50;
};

double msSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void runLearnBackdoor(const BackdoorArgs& a) {
  std::vector<CnfFormula> train, timing;
  std::optional<std::vector<int>> planted;
  std::optional<double> rho;
  if (!a.dataset.empty()) {
    DatasetManifest man = readManifest(a.dataset);
    require(man.spec.problemClass == ProblemClass::kMaxSat, ErrorCode::kUnsupportedClass,
            "learn-backdoor needs a CNF dataset");
    for (const auto& x : loadSplit(a.dataset, "train")) {
      train.push_back(x.pub.formula());
      if (!planted && x.eval.hiddenMetadata.contains("backdoor"))
        planted = x.eval.hiddenMetadata.at("backdoor").get<std::vector<int>>();
    }
    for (const auto& x : loadSplit(a.dataset, "val")) timing.push_back(x.pub.formula());
    if (man.effectiveParams.contains("rho")) rho = man.effectiveParams.at("rho").get<double>();
  } else {
    require(!a.dimacs.empty(), ErrorCode::kInvalidArgument, "give --dataset or --dimacs files");
    for (const auto& path : a.dimacs) {
      std::ifstream is(path);
      require(static_cast<bool>(is), ErrorCode::kIo, "cannot open " + path);
      train.push_back(readDimacs(is));
    }
    timing = train;
  }
  require(!train.empty(), ErrorCode::kInvalidArgument, "empty training sample");
  if (!a.exportDir.empty()) {
    fs::create_directories(a.exportDir);
    for (std::size_t i = 0; i < train.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "train-%04zu.cnf", i);
      std::ofstream os(fs::path(a.exportDir) / name);
      writeDimacs(os, train[i]);
    }
  }

  const int d = train.front().numVars;
  SalienceProfile prof = estimateSalience(train);
  std::vector<int> learned = topK(prof.sigmaHat, a.k);
  std::printf("sample m=%d  d=%d  k=%d\n", prof.m, d, a.k);
  if (rho && 2 * a.k < d)
    std::printf("sample size for delta=%.3g: %d\n", a.delta,
                backdoorSampleSize(d, a.k, *rho, a.delta));
  std::printf("%6s %10s %8s %8s\n", "var", "salience", "learned", "planted");
  for (int v = 0; v < d; ++v) {
    bool inL = std::find(learned.begin(), learned.end(), v) != learned.end();
    bool inP = planted && std::find(planted->begin(), planted->end(), v) != planted->end();
    std::printf("%6d %10.4f %8s %8s\n", v, prof.sigmaHat[v], inL ? "*" : "",
                planted ? (inP ? "*" : "") : "?");
  }
  std::printf("learned backdoor:");
  for (int v : learned) std::printf(" %d", v);
  std::printf("\n");
  if (planted) {
    auto p = *planted;
    std::sort(p.begin(), p.end());
    std::printf("recovered planted backdoor: %s\n", p == learned ? "yes" : "no");
  }

  CompiledBackdoorSolver solver{learned, "dpll"};
  solver.validate(d);
  std::size_t n = std::min<std::size_t>(timing.size(), static_cast<std::size_t>(a.timingLimit));
  double tB = 0, tD = 0;
  int shortcuts = 0, fallbacks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    auto rb = solveWithBackdoor(solver, timing[i]);
    tB += msSince(t0);
    t0 = std::chrono::steady_clock::now();
    auto rd = dpll(timing[i]);
    tD += msSince(t0);
    if (rb.result.satisfiable != rd.satisfiable)
      throw InvariantViolation("backdoor solver and dpll disagree on formula " +
                               std::to_string(i));
    shortcuts += rb.trace.shortcutUsed;
    fallbacks += rb.trace.fallbackUsed;
  }
  if (n > 0)
    std::printf("timing on %zu formulas: backdoor %.4f ms, dpll %.4f ms, speedup %.2fx, "
                "shortcut %d, fallback %d\n",
                n, tB / n, tD / n, tB > 0 ? tD / tB : 0.0, shortcuts, fallbacks);
}

}  // namespace

void addDataCommands(CLI::App& app) {
  auto gen = std::make_shared<GenerateArgs>();
  gen->seed = defaultSeed();
  auto* g = app.add_subcommand("generate", "Generate certified train/val/test datasets");
  g->add_option("--target,--targets", gen->targets, "'all' or comma list of <class>/<family>");
  g->add_option("--profile", gen->profile, "desk or paper");
  g->add_option("--seed", gen->seed, "dataset seed (default: HINTFORGE_SEED)");
  g->add_option("--n-train", gen->split.nTrain);
  g->add_option("--n-val", gen->split.nVal);
  g->add_option("--n-test", gen->split.nTest);
  g->add_option("--threads", gen->threads, "0 uses every core");
  g->add_flag("--no-certify", gen->noCertify, "skip the oracle re-check of desk instances");
  g->add_option("--out", gen->out, "output directory")->required();
  g->callback([gen] { runGenerate(*gen); });

  auto ora = std::make_shared<OracleArgs>();
  auto* o = app.add_subcommand("oracle", "Solve an instance exactly and compare with its stored optimum");
  o->add_option("--instance", ora->instance)->required()->check(CLI::ExistingFile);
  o->add_option("--seconds", ora->seconds, "time budget");
  o->callback([ora] { runOracle(*ora); });

  auto sol = std::make_shared<SolveArgs>();
  sol->seed = defaultSeed();
  auto* s = app.add_subcommand("solve", "Run one catalog solver on one instance");
  s->add_option("--instance", sol->instance)->required()->check(CLI::ExistingFile);
  s->add_option("--solver", sol->solver)->required();
  s->add_option("--seed", sol->seed);
  s->add_option("--out", sol->out, "JSON output file (default stdout)");
  s->callback([sol] { runSolve(*sol); });

  auto sel = std::make_shared<SelectArgs>();
  sel->erm.seed = defaultSeed();
  auto* e = app.add_subcommand("select", "Runtime-aware ERM selection over the solver library");
  e->add_option("--dataset", sel->dataset)->required()->check(CLI::ExistingDirectory);
  e->add_option("--split", sel->split, "train or val");
  e->add_option("--library", sel->library, "catalog or catalog+exact");
  e->add_option("--delta", sel->erm.delta);
  e->add_option("--tmax", sel->erm.tMaxMs, "runtime cap Tmax in ms");
  e->add_flag("--require-optimal", sel->erm.requireOptimal,
              "count non-optimal runs as errors");
  e->add_option("--seed", sel->erm.seed);
  e->add_option("--out", sel->out);
  e->callback([sel] { runSelect(*sel); });

  auto bd = std::make_shared<BackdoorArgs>();
  auto* b = app.add_subcommand("learn-backdoor", "Recover a Horn backdoor from sample formulas");
  b->add_option("--dataset", bd->dataset)->check(CLI::ExistingDirectory);
  b->add_option("--dimacs", bd->dimacs, "DIMACS files used instead of a dataset")
      ->check(CLI::ExistingFile);
  b->add_option("--k", bd->k)->check(CLI::PositiveNumber);
  b->add_option("--delta", bd->delta);
  b->add_option("--export-dimacs", bd->exportDir, "write the training formulas here");
  b->add_option("--timing-limit", bd->timingLimit, "formulas used for the speed comparison");
  b->callback([bd] { runLearnBackdoor(*bd); });
}

}  // namespace hintforge::cli
