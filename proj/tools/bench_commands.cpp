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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hintforge/dataset.hpp"
#include "hintforge/erm.hpp"
#include "hintforge/error.hpp"
#include "hintforge/harness.hpp"
#include "hintforge/serialize.hpp"
#include "hintforge/synthesis.hpp"

namespace hintforge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct SourceArgs {
  std::string profile = "desk";
  std::string datasetRoot;
  SplitSpec split{64, 32, 100};
  std::uint64_t seed = 0;
};

/// Loads DIR/<class>/<family> when a dataset root is given, else generates.
TargetDataset obtainTarget(const FamilyInfo& fam, const SourceArgs& src, bool withTest) {
  if (!src.datasetRoot.empty()) {
    fs::path dir = fs::path(src.datasetRoot) / toString(fam.problemClass) / fam.name;
    DatasetManifest man = readManifest(dir);
    TargetDataset ds;
    ds.spec = man.spec;
    ds.split = man.split;
    ds.effectiveParams = man.effectiveParams;
    ds.specHash = man.specHash;
    ds.train = loadSplit(dir, "train");
    ds.val = loadSplit(dir, "val");
    if (withTest) ds.test = loadSplit(dir, "test");
    return ds;
  }
  FamilySpec spec{fam.problemClass, fam.name, parseSizeProfile(src.profile), json::object(),
                  src.seed};
  SplitSpec split = src.split;
  if (!withTest) split.nTest = 0;
  return generateTarget(spec, split);
}

void addSourceOptions(CLI::App* c, SourceArgs& src) {
  c->add_option("--profile", src.profile, "desk or paper");
  c->add_option("--dataset-root", src.datasetRoot,
                "read DIR/<class>/<family> instead of generating");
  c->add_option("--n-train", src.split.nTrain);
  c->add_option("--n-val", src.split.nVal);
  c->add_option("--n-test", src.split.nTest);
  c->add_option("--seed", src.seed, "dataset and solver seed (default: HINTFORGE_SEED)");
}

SynthesisConfig synthesisConfig(int R, int B, int K, std::uint64_t seed, int threads) {
  SynthesisConfig cfg;
  cfg.rounds = R;
  cfg.beamWidth = B;
  cfg.budget = K;
  cfg.seed = seed;
  cfg.threads = threads;
  return cfg;
}

void checkUnit(double x, const std::string& what) {
  if (!(x >= 0 && x <= 1)) throw InvariantViolation(what + " outside [0, 1]");
}

// ---------------------------------------------------------------------------

struct RunArgs {
  SourceArgs src;
  std::string targets = "all";
  std::string method = "synthesize";
  std::string proposer = "catalog";
  int R = 4, B = 4, K = 8;
  BenchConfig bench;
  bool withExact = true;
  bool serialTiming = false;
  int threads = 1;
  std::string out = "report.json";
  std::string csv;
};

void runBench(const RunArgs& a) {
  BenchConfig cfg = a.bench;
  cfg.seed = a.src.seed;
  cfg.threads = a.serialTiming ? 1 : a.threads;
  std::vector<BenchTarget> targets;
  json selection = json::object();
  for (const auto& fam : parseTargets(a.targets)) {
    TargetDataset ds = obtainTarget(fam, a.src, true);
    BenchTarget t;
    t.name = ds.targetName();
    t.problemClass = fam.problemClass;
    t.heuristics = catalog(fam.problemClass);
    if (a.withExact) t.exact = exactSolver(fam.problemClass);
    if (a.method == "synthesize") {
      auto proposer = makeProposer(a.proposer);
      auto res = runSynthesis(*proposer, fam.problemClass, ds.train, ds.val,
                              synthesisConfig(a.R, a.B, a.K, a.src.seed, a.threads));
      t.method = res.deployed;
      selection[t.name] = {{"candidate", res.best.id},
                           {"spec", toJson(res.best.spec)},
                           {"validation", {{"qVal", res.best.score.qVal},
                                           {"oVal", res.best.score.oVal},
                                           {"tValMs", res.best.score.tValMs}}}};
    } else if (a.method == "erm") {
      auto lib = catalog(fam.problemClass);
      ErmConfig ecfg;
      ecfg.seed = a.src.seed;
      ErmSelection sel = selectErm(lib, ds.train, ecfg);
      require(sel.chosenId.has_value(), ErrorCode::kNoCandidate,
              "no sample-consistent solver for " + t.name);
      t.method = findSolver(fam.problemClass, *sel.chosenId);
      selection[t.name] = toJson(sel);
    } else {
      throw Error(ErrorCode::kInvalidArgument, "method must be synthesize or erm");
    }
    t.method.id = "method:" + t.method.id;
    t.test = std::move(ds.test);
    std::fprintf(stderr, "[bench] %s: method %s, %zu test instances\n", t.name.c_str(),
                 t.method.id.c_str(), t.test.size());
    targets.push_back(std::move(t));
  }

  EvalReport rep = runBenchmark(targets, cfg);

  // Aggregates must be reproducible from the raw records alone.
  EvalReport again = summarizeRecords(rep.records, cfg);
  if (toJson(again, false) != toJson(rep, false))
    throw InvariantViolation("report aggregates differ from a recomputation over raw records");
  for (const auto& r : rep.records) checkUnit(r.quality, "quality of " + r.instanceId);

  json j = toJson(rep);
  j["config"]["method"] = a.method;
  j["config"]["proposer"] = a.proposer;
  j["config"]["profile"] = a.src.profile;
  j["selection"] = selection;
  writeJsonFile(a.out, j);
  if (!a.csv.empty()) {
    std::ofstream os(a.csv);
    require(static_cast<bool>(os), ErrorCode::kIo, "cannot write " + a.csv);
    os << toCsv(rep);
  }
  std::cout << toCsv(rep);
  const auto& ag = rep.aggregate;
  std::printf("\nQ %.4f  dQavg %+.4f  dQbest %+.4f  T %.4f ms  T_best/T %.3fx", ag.meanQuality,
              ag.meanDeltaQAvg, ag.meanDeltaQBest, ag.geoMeanRuntimeMs, ag.geoSpeedupVsBest);
  if (ag.geoSpeedupVsExact) std::printf("  T_exact/T %.3fx", *ag.geoSpeedupVsExact);
  std::printf("\n");
}

// ---------------------------------------------------------------------------

struct PerturbArgs {
  SourceArgs src;
  std::string target;
  std::string solver = "all";
  std::string out;
};

void runPerturb(const PerturbArgs& a) {
  json rows = json::array();
  for (const auto& fam : parseTargets(a.target)) {
    require(isGraphClass(fam.problemClass), ErrorCode::kUnsupportedClass,
            "perturbation needs a graph target, not " + std::string(toString(fam.problemClass)));
    TargetDataset ds = obtainTarget(fam, a.src, true);
    std::vector<MeasuredSolver> solvers;
    if (a.solver == "all")
      solvers = catalog(fam.problemClass);
    else
      solvers.push_back(findSolver(fam.problemClass, a.solver));
    PerturbationConfig cfg;
    cfg.seed = a.src.seed;
    for (const auto& s : solvers) {
      PerturbationReport r = runPerturbationAblation(ds.targetName(), ds.test, s, cfg);
      checkUnit(r.feasibilityChanged, "feasibility-changed fraction");
      checkUnit(r.qualityChanged, "quality-changed fraction");
      std::printf("%-28s %-24s Qorig %.4f Qpert %.4f dQ %+.4f  qual-chg %.3f opt-chg %.3f "
                  "feas-chg %.3f  t-ratio %.3f\n",
                  r.target.c_str(), r.solverId.c_str(), r.qOrig, r.qPert, r.deltaQ,
                  r.qualityChanged, r.optimalityChanged, r.feasibilityChanged, r.runtimeRatio);
      rows.push_back(toJson(r));
    }
  }
  if (!a.out.empty()) writeJsonFile(a.out, rows);
}

// ---------------------------------------------------------------------------

struct SynthArgs {
  std::string dataset;
  std::string proposer = "catalog";
  std::vector<std::string> command;
  int R = 4, B = 4, K = 8;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string out;
};

void runSynthesize(const SynthArgs& a) {
  DatasetManifest man = readManifest(a.dataset);
  // Only the public training and validation splits are read.
  std::vector<Instance> train = loadSplit(a.dataset, "train");
  std::vector<Instance> val = loadSplit(a.dataset, "val");
  std::unique_ptr<Proposer> proposer;
  if (a.proposer == "subprocess") {
    require(!a.command.empty(), ErrorCode::kInvalidArgument,
            "--proposer subprocess needs --command");
    proposer = std::make_unique<SubprocessProposer>(a.command);
  } else {
    proposer = makeProposer(a.proposer);
  }
  auto res = runSynthesis(*proposer, man.spec.problemClass, train, val,
                          synthesisConfig(a.R, a.B, a.K, a.seed, a.threads));
  for (const auto& r : res.rounds) {
    std::printf("round %d: %zu candidates, %d failed prompts, best %s (Q %.4f O %.4f T %.4f ms)\n",
                r.round, r.proposed.size(), r.failedPrompts, r.archiveBestId.c_str(),
                r.archiveBest.qVal, r.archiveBest.oVal, r.archiveBest.tValMs);
  }
  for (std::size_t i = 1; i < res.rounds.size(); ++i)
    if (scoreBetter(res.rounds[i - 1].archiveBest, res.rounds[i].archiveBest))
      throw InvariantViolation("archive-best score decreased between rounds");
  std::printf("selected %s: %s [%s]\n", res.best.id.c_str(), res.best.spec.hypothesis.title.c_str(),
              res.best.spec.solverSpecId.c_str());
  json j = toJson(res);
  j["target"] = man.targetName();
  if (!a.out.empty()) writeJsonFile(a.out, j);
}

}  // namespace

void addBenchCommands(CLI::App& app) {
  auto* bench = app.add_subcommand("bench", "Evaluation, perturbation and synthesis runs");
  bench->require_subcommand(1);

  auto run = std::make_shared<RunArgs>();
  run->src.seed = defaultSeed();
  auto* r = bench->add_subcommand("run", "Benchmark a learned method against the heuristic pool");
  addSourceOptions(r, run->src);
  r->add_option("--targets,--target", run->targets);
  r->add_option("--method", run->method, "synthesize or erm");
  r->add_option("--proposer", run->proposer, "catalog, catalog+exact, backdoor or 2opt");
  r->add_option("-R", run->R);
  r->add_option("-B", run->B);
  r->add_option("-K", run->K);
  r->add_option("--repeats", run->bench.repeats);
  r->add_option("--clip-ms", run->bench.clipMs);
  r->add_flag("!--no-exact", run->withExact, "skip the exact-solver baseline");
  r->add_flag("--serial-timing", run->serialTiming, "time one solve at a time");
  r->add_option("--threads", run->threads);
  r->add_option("--out", run->out, "JSON report");
  r->add_option("--csv", run->csv, "per-target CSV table");
  r->callback([run] { runBench(*run); });

  auto per = std::make_shared<PerturbArgs>();
  per->src.seed = defaultSeed();
  auto* p = bench->add_subcommand("perturb", "Vertex-relabeling ablation on graph targets");
  addSourceOptions(p, per->src);
  p->add_option("--target,--targets", per->target)->required();
  p->add_option("--solver", per->solver, "catalog id or 'all'");
  p->add_option("--out", per->out);
  p->callback([per] { runPerturb(*per); });

  auto syn = std::make_shared<SynthArgs>();
  syn->seed = defaultSeed();
  auto* s = bench->add_subcommand("synthesize", "Beam-search synthesis on one dataset");
  s->add_option("--dataset", syn->dataset)->required()->check(CLI::ExistingDirectory);
  s->add_option("--proposer", syn->proposer,
                "catalog, catalog+exact, backdoor, 2opt or subprocess");
  s->add_option("--command", syn->command, "proposer program and arguments");
  s->add_option("-R", syn->R);
  s->add_option("-B", syn->B);
  s->add_option("-K", syn->K);
  s->add_option("--threads", syn->threads);
  s->add_option("--seed", syn->seed);
  s->add_option("--out", syn->out);
  s->callback([syn] { runSynthesize(*syn); });
}

}  // namespace hintforge::cli
