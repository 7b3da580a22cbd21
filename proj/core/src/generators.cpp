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

#include "hintforge/generators.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <thread>

#include "gen/families.hpp"
#include "hintforge/error.hpp"
#include "hintforge/serialize.hpp"
#include "hintforge/verify.hpp"

namespace hintforge {

using nlohmann::json;

std::string_view toString(SizeProfile p) {
  return p == SizeProfile::kPaper ? "paper" : "desk";
}

SizeProfile parseSizeProfile(std::string_view name) {
  if (name == "paper") return SizeProfile::kPaper;
  if (name == "desk") return SizeProfile::kDesk;
  throw Error(ErrorCode::kInvalidArgument, "unknown size profile '" + std::string(name) + "'");
}

namespace {

struct FamilyEntry {
  FamilyInfo info;
  gen::FamilyFn fn;
  json paper;
  json desk;
};

const std::vector<FamilyEntry>& entries() {
  using PC = ProblemClass;
  static const std::vector<FamilyEntry> table = {
      {{PC::kColoring, "ring-template", "Ring-template", true}, gen::ringTemplate,
       {{"blocks", 13}, {"blockSize", 13}, {"colors", 4}, {"templateDensity", 0.45},
        {"dropRate", 0.1}, {"bridgeDensity", 0.06}},
       {{"blocks", 5}, {"blockSize", 6}, {"colors", 4}, {"templateDensity", 0.45},
        {"dropRate", 0.1}, {"bridgeDensity", 0.15}}},
      {{PC::kColoring, "overlapping-palette", "Overlapping-palette", true},
       gen::overlappingPalette,
       {{"blocks", 20}, {"blockSize", 17}, {"colors", 6}, {"paletteWidth", 4},
        {"paletteShift", 2}, {"intraDensity", 0.45}, {"crossDensity", 0.08}},
       {{"blocks", 5}, {"blockSize", 7}, {"colors", 6}, {"paletteWidth", 4},
        {"paletteShift", 2}, {"intraDensity", 0.45}, {"crossDensity", 0.15}}},
      {{PC::kColoring, "separator-trap", "Separator-trap", true}, gen::separatorTrap,
       {{"blocks", 14}, {"blockSize", 16}, {"colors", 5}, {"intraDensity", 0.5},
        {"ownDensity", 0.3}, {"separatorDensity", 0.5}},
       {{"blocks", 4}, {"blockSize", 7}, {"colors", 5}, {"intraDensity", 0.5},
        {"ownDensity", 0.3}, {"separatorDensity", 0.5}}},

      {{PC::kMaxSat, "community-parity", "Community-parity", true}, gen::communityParity,
       {{"numVars", 240}, {"numClauses", 960}, {"communitySize", 8}, {"crossFraction", 0.2}},
       {{"numVars", 20}, {"numClauses", 80}, {"communitySize", 5}, {"crossFraction", 0.2}}},
      {{PC::kMaxSat, "last-clause-signal", "Last-clause-signal", true}, gen::lastClauseSignal,
       {{"numVars", 280}, {"numClauses", 1120}, {"anchors", 8}},
       {{"numVars", 20}, {"numClauses", 80}, {"anchors", 4}}},
      {{PC::kMaxSat, "latent-backdoor", "Latent-backdoor", true}, gen::latentBackdoor,
       {{"numVars", 128}, {"numClauses", 512}, {"anchors", 4}, {"regimes", 3},
        {"bridgeClauses", 132}, {"noiseClauses", 132}},
       {{"numVars", 20}, {"numClauses", 80}, {"anchors", 4}, {"regimes", 3},
        {"bridgeClauses", 24}, {"noiseClauses", 24}}},
      {{PC::kMaxSat, "horn-backdoor", "Horn-backdoor", false}, gen::hornBackdoor,
       {{"numVars", 40}, {"backdoorSize", 3}, {"numClauses", 160}, {"rho", 0.5},
        {"hornWidth", 3}, {"tailSize", 2}},
       {{"numVars", 12}, {"backdoorSize", 2}, {"numClauses", 48}, {"rho", 0.5},
        {"hornWidth", 3}, {"tailSize", 2}}},

      {{PC::kMis, "clique-path", "Clique-path", true}, gen::cliquePath,
       {{"components", 10}, {"cliqueSize", 7}, {"pathLength", 12}, {"extraLinks", 2}},
       {{"components", 2}, {"cliqueSize", 5}, {"pathLength", 6}, {"extraLinks", 1}}},
      {{PC::kMis, "core-fringe", "Core-fringe", true}, gen::coreFringe,
       {{"coreCliques", 50}, {"cliqueSize", 8}, {"fringePairs", 300}, {"coreDensity", 0.05},
        {"keeperLinks", 2}},
       {{"coreCliques", 3}, {"cliqueSize", 4}, {"fringePairs", 9}, {"coreDensity", 0.3},
        {"keeperLinks", 2}}},
      {{PC::kMis, "motif-bridge", "Motif-bridge", true}, gen::motifBridge,
       {{"numVertices", 195}, {"cliqueSize", 5}, {"cycleLength", 6}, {"bicliqueSide", 3},
        {"crownSide", 4}, {"bridgesPerLink", 3}},
       {{"numVertices", 24}, {"cliqueSize", 5}, {"cycleLength", 6}, {"bicliqueSide", 3},
        {"crownSide", 4}, {"bridgesPerLink", 2}}},

      {{PC::kMds, "gateway-hub", "Gateway-hub", true}, gen::gatewayHub,
       {{"clusters", 100}, {"clusterSize", 28}, {"gatewayCoverage", 0.6},
        {"memberDensity", 0.1}},
       {{"clusters", 4}, {"clusterSize", 8}, {"gatewayCoverage", 0.6},
        {"memberDensity", 0.2}}},
      {{PC::kMds, "geometric-anchor", "Geometric-anchor", true}, gen::geometricAnchor,
       {{"numVertices", 1600}, {"clusters", 64}, {"minClusterSize", 12},
        {"clusterRadius", 3.0}, {"linkRadius", 1.5}, {"spacing", 7.0}},
       {{"numVertices", 30}, {"clusters", 4}, {"minClusterSize", 5},
        {"clusterRadius", 3.0}, {"linkRadius", 1.5}, {"spacing", 7.0}}},
      {{PC::kMds, "star-kernel", "Star-kernel", true}, gen::starKernel,
       {{"clusters", 100}, {"clusterSize", 28}, {"hubCoverage", 0.9},
        {"memberDensity", 0.05}, {"hubLinkDensity", 0.03}},
       {{"clusters", 4}, {"clusterSize", 8}, {"hubCoverage", 0.9},
        {"memberDensity", 0.15}, {"hubLinkDensity", 0.3}}},

      {{PC::kPackingLp, "block-coupled", "Block-coupled", true}, gen::blockCoupled,
       {{"numItems", 1200}, {"numResources", 40}, {"spillover", 0.3},
        {"activeBlockShare", 0.5}},
       {{"numItems", 30}, {"numResources", 5}, {"spillover", 0.3},
        {"activeBlockShare", 0.5}}},
      {{PC::kPackingLp, "active-resource", "Active-resource", true}, gen::activeResource,
       {{"numItems", 1200}, {"numResources", 40}, {"regimes", 4}, {"activeCount", 8},
        {"usageDensity", 0.4}},
       {{"numItems", 30}, {"numResources", 5}, {"regimes", 4}, {"activeCount", 2},
        {"usageDensity", 0.4}}},
      {{PC::kPackingLp, "single-bottleneck", "Single-bottleneck", true},
       gen::singleBottleneck,
       {{"numItems", 1200}, {"numResources", 40}, {"usageDensity", 0.3}},
       {{"numItems", 30}, {"numResources", 5}, {"usageDensity", 0.3}}},

      {{PC::kMdkp, "decoy-complement", "Decoy-complement", true}, gen::decoyComplement,
       {{"numItems", 1040}, {"numResources", 48}, {"decoyShare", 0.3},
        {"complementTakeShare", 0.6}},
       {{"numItems", 20}, {"numResources", 4}, {"decoyShare", 0.3},
        {"complementTakeShare", 0.6}}},
      {{PC::kMdkp, "latent-class", "Latent-class", true}, gen::latentClass,
       {{"numItems", 520}, {"numResources", 32}, {"prototypes", 4}, {"noise", 0.2}},
       {{"numItems", 20}, {"numResources", 4}, {"prototypes", 4}, {"noise", 0.2}}},
      {{PC::kMdkp, "single-resource", "Single-resource", true}, gen::singleResource,
       {{"numItems", 1040}, {"numResources", 48}},
       {{"numItems", 20}, {"numResources", 4}}},

      {{PC::kTsp, "clustered-euclidean", "Clustered-Euclidean", true},
       gen::clusteredEuclidean,
       {{"numCities", 120}, {"clusters", 8}, {"arcFraction", 0.6}, {"radiusMin", 50.0},
        {"radiusMax", 100.0}},
       {{"numCities", 12}, {"clusters", 3}, {"arcFraction", 0.6}, {"radiusMin", 50.0},
        {"radiusMax", 100.0}}},
      {{PC::kTsp, "latent-metric", "Latent-metric", true}, gen::latentMetric,
       {{"numCities", 120}, {"scale", 100.0}},
       {{"numCities", 12}, {"scale", 100.0}}},
      {{PC::kTsp, "paired-ribbon", "Paired-ribbon", true}, gen::pairedRibbon,
       {{"numCities", 320}, {"spacing", 10.0}, {"height", 15.0}},
       {{"numCities", 12}, {"spacing", 10.0}, {"height", 15.0}}},
  };
  return table;
}

const FamilyEntry& findEntry(ProblemClass c, std::string_view name) {
  for (const auto& e : entries())
    if (e.info.problemClass == c && e.info.name == name) return e;
  throw Error(ErrorCode::kNotFound, "unknown family '" + std::string(name) + "' for class " +
                                        std::string(toString(c)));
}

bool sameOptimum(ProblemClass c, double a, double b) {
  switch (c) {
    case ProblemClass::kPackingLp:
      return std::abs(a - b) <= 1e-7 * std::max(1.0, std::abs(b));
    case ProblemClass::kTsp:
      return std::abs(a - b) <= kRelativeOptimalityTolerance * std::max(1.0, std::abs(b));
    default:
      return std::llround(a) == std::llround(b);
  }
}

std::string formatValue(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

const std::vector<FamilyInfo>& familyRegistry() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const FamilyInfo& findFamily(ProblemClass c, std::string_view name) {
  return findEntry(c, name).info;
}

std::string TargetDataset::targetName() const {
  return std::string(toString(spec.problemClass)) + "/" + spec.familyName;
}

json familyParameters(const FamilySpec& spec) {
  const auto& e = findEntry(spec.problemClass, spec.familyName);
  json params = spec.profile == SizeProfile::kPaper ? e.paper : e.desk;
  if (!spec.familyParams.is_null()) {
    require(spec.familyParams.is_object(), ErrorCode::kInvalidArgument,
            "familyParams must be a JSON object");
    params.merge_patch(spec.familyParams);
  }
  return params;
}

Instance generateInstance(const FamilySpec& spec, std::string_view split, int index) {
  const auto& e = findEntry(spec.problemClass, spec.familyName);
  const json params = familyParameters(spec);
  const std::string cls(toString(spec.problemClass));
  const std::uint64_t familySeed =
      CounterRng::derive(spec.seed, cls, spec.familyName, "family").next();
  auto rng = CounterRng::derive(spec.seed, cls, spec.familyName, split, index);
  gen::FamilyContext ctx{params, familySeed, rng};

  gen::Planted planted;
  try {
    planted = e.fn(ctx);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kInvalidArgument,
                "family '" + spec.familyName + "': bad parameters: " + ex.what());
  }

  char id[32];
  std::snprintf(id, sizeof id, "-%04d", index);
  Instance inst;
  inst.pub.id = spec.familyName + "-" + std::string(split) + id;
  inst.pub.problemClass = spec.problemClass;
  inst.pub.data = std::move(planted.data);
  inst.eval.familyId = std::string(toString(spec.problemClass)) + "/" + spec.familyName;
  inst.eval.hiddenMetadata = std::move(planted.hidden);
  inst.eval.optimumValue = planted.optimum;
  inst.eval.optimumSolution = std::move(planted.solution);
  inst.eval.certified = true;

  inst.pub.validate();
  const auto& sol = *inst.eval.optimumSolution;
  require(verify(inst.pub, sol) &&
              sameOptimum(spec.problemClass, rawObjective(inst.pub, sol), planted.optimum),
          ErrorCode::kGeneration, "instance " + inst.id() + ": planted solution is inconsistent");
  return inst;
}

void certifyWithOracle(const Instance& inst, const OracleBudget& budget) {
  ExactAnswer exact;
  try {
    exact = solveExact(inst.pub, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    throw Error(ErrorCode::kGeneration,
                "instance " + inst.id() + ": certification ran out of budget (" + e.what() + ")");
  }
  if (!sameOptimum(inst.problemClass(), exact.value, inst.eval.optimumValue)) {
    throw Error(ErrorCode::kGeneration,
                "instance " + inst.id() + ": oracle optimum " + formatValue(exact.value) +
                    " disagrees with planted optimum " + formatValue(inst.eval.optimumValue));
  }
}

TargetDataset generateTarget(const FamilySpec& spec, const SplitSpec& split,
                             const GenerateOptions& options) {
  require(split.nTrain >= 0 && split.nVal >= 0 && split.nTest >= 0,
          ErrorCode::kInvalidArgument, "split counts must be nonnegative");
  TargetDataset out;
  out.spec = spec;
  out.split = split;
  out.effectiveParams = familyParameters(spec);
  out.specHash = digestHex({{"problemClass", toString(spec.problemClass)},
                            {"familyName", spec.familyName},
                            {"profile", toString(spec.profile)},
                            {"params", out.effectiveParams},
                            {"seed", spec.seed},
                            {"split", {split.nTrain, split.nVal, split.nTest}}});

  struct Job {
    const char* split;
    int index;
    std::vector<Instance>* dest;
  };
  out.train.resize(split.nTrain);
  out.val.resize(split.nVal);
  out.test.resize(split.nTest);
  std::vector<Job> jobs;
  for (int i = 0; i < split.nTrain; ++i) jobs.push_back({"train", i, &out.train});
  for (int i = 0; i < split.nVal; ++i) jobs.push_back({"val", i, &out.val});
  for (int i = 0; i < split.nTest; ++i) jobs.push_back({"test", i, &out.test});

  const bool certify = options.certify && spec.profile == SizeProfile::kDesk;
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      try {
        auto inst = generateInstance(spec, jobs[j].split, jobs[j].index);
        if (certify) certifyWithOracle(inst, options.certifyBudget);
        (*jobs[j].dest)[jobs[j].index] = std::move(inst);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                         : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string digestHex(const json& j) {
  const std::string text = canonicalDump(j);
  std::uint64_t a = hashString(text), b = mix64(a ^ text.size());
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(a),
                static_cast<unsigned long long>(b));
  return buf;
}

}  // namespace hintforge
