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

#include "hintforge/synthesis.hpp"

#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>

#include "hintforge/backdoor.hpp"
#include "hintforge/baselines.hpp"
#include "hintforge/error.hpp"
#include "hintforge/serialize.hpp"
#include "parallel.hpp"

namespace hintforge {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Templates

namespace {

CandidateSolverFn wrap(MeasuredSolver s) {
  return [s = std::move(s)](const PublicInstance& x, const Summary&, std::uint64_t seed) {
    return s.solve(x, seed);
  };
}

std::vector<int> backdoorFromSummary(const Summary& summary, int numVars) {
  std::vector<int> out;
  if (!summary.is_object() || !summary.contains("backdoor")) return out;
  for (const auto& v : summary.at("backdoor")) {
    int var = v.get<int>();
    if (var >= 0 && var < numVars) out.push_back(var);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TemplateRegistry TemplateRegistry::builtin() {
  TemplateRegistry r;
  r.addAnalysis("none", [](ProblemClass, const json&) -> AnalysisFn {
    return [](std::span<const PublicInstance>) { return Summary::object(); };
  });
  r.addAnalysis("salience-backdoor", [](ProblemClass c, const json& params) -> AnalysisFn {
    require(c == ProblemClass::kMaxSat, ErrorCode::kUnsupportedClass,
            "salience-backdoor needs CNF instances");
    int k = params.value("k", 2);
    require(k >= 0, ErrorCode::kInvalidArgument, "salience-backdoor: k must be nonnegative");
    return [k](std::span<const PublicInstance> sample) {
      Summary s = {{"k", k}, {"backdoor", json::array()}, {"sigmaHat", json::array()}};
      if (sample.empty() || k == 0) return s;
      std::vector<CnfFormula> formulas;
      for (const auto& x : sample) formulas.push_back(x.formula());
      auto profile = estimateSalience(formulas);
      int kk = std::min<int>(k, static_cast<int>(profile.sigmaHat.size()));
      s["backdoor"] = topK(profile.sigmaHat, kk);
      s["sigmaHat"] = profile.sigmaHat;
      return s;
    };
  });

  r.addSolver("exact", [](ProblemClass c, const json& params) {
    OracleBudget budget;
    budget.maxSeconds = params.value("maxSeconds", budget.maxSeconds);
    return wrap(exactSolver(c, budget));
  });
  r.addSolver("backdoor-sat", [](ProblemClass c, const json& params) -> CandidateSolverFn {
    require(c == ProblemClass::kMaxSat, ErrorCode::kUnsupportedClass,
            "backdoor-sat needs CNF instances");
    int maxFlips = params.value("maxFlips", 1000);
    return [maxFlips](const PublicInstance& x, const Summary& summary, std::uint64_t) {
      const auto& f = x.formula();
      CompiledBackdoorSolver solver{backdoorFromSummary(summary, f.numVars), "dpll"};
      auto res = solveWithBackdoor(solver, f);
      if (res.result.satisfiable)
        return SolveOutput{Assignment{res.result.assignment}, res.trace};
      auto local = baselines::greedyFlipSearch(f, maxFlips);
      local.trace.fallbackUsed = true;
      return SolveOutput{std::move(local.solution), local.trace};
    };
  });
  r.addSolver("multistart-2opt", [](ProblemClass c, const json& params) {
    require(c == ProblemClass::kTsp, ErrorCode::kUnsupportedClass,
            "multistart-2opt needs TSP instances");
    return wrap(twoOptSolver(params.value("starts", 8), params.value("maxPasses", 10000)));
  });
  return r;
}

void TemplateRegistry::addAnalysis(const std::string& id, AnalysisFactory f) {
  analyses_[id] = std::move(f);
}

void TemplateRegistry::addSolver(const std::string& id, SolverFactory f) {
  solvers_[id] = std::move(f);
}

AnalysisFn TemplateRegistry::analysis(const std::string& id, ProblemClass c,
                                      const json& params) const {
  auto it = analyses_.find(id);
  require(it != analyses_.end(), ErrorCode::kNotFound, "no analysis template '" + id + "'");
  return it->second(c, params);
}

CandidateSolverFn TemplateRegistry::solver(const std::string& id, ProblemClass c,
                                           const json& params) const {
  auto it = solvers_.find(id);
  if (it != solvers_.end()) return it->second(c, params);
  const std::string prefix = "catalog:";
  if (id.rfind(prefix, 0) == 0) return wrap(findSolver(c, id.substr(prefix.size())));
  throw Error(ErrorCode::kNotFound, "no solver template '" + id + "'");
}

// ---------------------------------------------------------------------------
// Scoring and ranking

bool scoreBetter(const CandidateScore& a, const CandidateScore& b) {
  if (a.qVal != b.qVal) return a.qVal > b.qVal;
  if (a.oVal != b.oVal) return a.oVal > b.oVal;
  return a.tValMs < b.tValMs;
}

CandidateScore scoreFromLogs(std::span<const InstanceLog> logs) {
  CandidateScore s;
  if (logs.empty()) return s;
  double q = 0, o = 0, t = 0;
  for (const auto& l : logs) {
    q += l.crashed ? 0.0 : l.quality;
    o += (!l.crashed && l.optimal) ? 1.0 : 0.0;
    t += l.runtimeMs;
  }
  const double n = static_cast<double>(logs.size());
  s.qVal = q / n;
  s.oVal = o / n;
  s.tValMs = t / n;
  return s;
}

std::vector<InstanceLog> evaluateSolver(const std::string& candidateId,
                                        const CandidateSolverFn& solver, const Summary& summary,
                                        std::span<const Instance> evalSet,
                                        const ScoringOptions& opt) {
  std::vector<InstanceLog> logs(evalSet.size());
  detail::parallelFor(evalSet.size(), opt.threads, [&](std::size_t i) {
    const Instance& inst = evalSet[i];
    MeasuredSolver ms;
    ms.id = candidateId;
    ms.problemClass = inst.problemClass();
    ms.solve = [&](const PublicInstance& x, std::uint64_t seed) {
      return solver(x, summary, seed);
    };
    RunOptions ro;
    ro.failureRuntimeMs = opt.failureRuntimeMs;
    ro.seed = solverSeed(opt.seed, candidateId, inst.id());
    ro.clock = opt.clock;
    auto m = runMeasured(ms, inst, ro);
    logs[i] = {inst.id(), m.scored.quality, m.scored.feasible, m.scored.optimal, m.wallClockMs,
               m.crashed};
  });
  return logs;
}

bool candidateRanksAbove(const Candidate& a, const Candidate& b) {
  if (scoreBetter(a.score, b.score)) return true;
  if (scoreBetter(b.score, a.score)) return false;
  return a.id < b.id;
}

std::vector<std::size_t> updateBeam(std::span<const Candidate> pool, int beamWidth) {
  require(beamWidth >= 1, ErrorCode::kInvalidArgument, "beam width must be at least 1");
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidateRanksAbove(pool[a], pool[b]);
  });
  const auto width = static_cast<std::size_t>(beamWidth);
  std::vector<char> taken(pool.size(), 0);
  std::set<std::string> keys;
  std::size_t count = 0;
  for (std::size_t i : order) {
    if (count == width) break;
    if (keys.insert(pool[i].spec.hypothesis.diversityKey).second) {
      taken[i] = 1;
      ++count;
    }
  }
  for (std::size_t i : order) {
    if (count == width) break;
    if (!taken[i]) {
      taken[i] = 1;
      ++count;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i : order)
    if (taken[i]) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Proposers

namespace {

constexpr std::array<std::string_view, 6> kActionNames = {
    "seed", "refine", "fork", "replace", "push-runtime", "push-quality"};

int paramOr(const std::optional<ParentContext>& p, const char* key, int fallback) {
  if (!p || !p->spec.params.is_object()) return fallback;
  return p->spec.params.value(key, fallback);
}

class CatalogProposer : public Proposer {
 public:
  explicit CatalogProposer(bool includeExact) : includeExact_(includeExact) {}

  std::optional<CandidateSpec> propose(ProposerAction action, const ProposerContext& ctx) override {
    std::vector<std::string> ids;
    for (const auto& s : catalog(ctx.problemClass)) ids.push_back(s.id);
    if (includeExact_) ids.push_back("exact");
    const std::size_t n = ids.size();
    std::size_t index = static_cast<std::size_t>(ctx.slot) % n;
    if (action != ProposerAction::kSeed && ctx.parent) {
      std::string parentId = ctx.parent->spec.solverSpecId;
      if (parentId.rfind("catalog:", 0) == 0) parentId = parentId.substr(8);
      auto it = std::find(ids.begin(), ids.end(), parentId);
      std::size_t p = it == ids.end() ? 0 : static_cast<std::size_t>(it - ids.begin());
      index = (p + 1 + static_cast<std::size_t>(ctx.slot)) % n;
    }
    const std::string& id = ids[index];
    CandidateSpec spec;
    spec.hypothesis = {"Catalog heuristic " + id,
                       "No distribution-specific rule; the stock procedure is applied as is.",
                       "None.",
                       "Run " + id + " on each instance.",
                       "Misses any structure the generator plants.",
                       id};
    spec.analysisSpecId = "none";
    spec.solverSpecId = id == "exact" ? "exact" : "catalog:" + id;
    return spec;
  }

 private:
  bool includeExact_;
};

class BackdoorProposer : public Proposer {
 public:
  explicit BackdoorProposer(std::vector<int> ks) : ks_(std::move(ks)) {
    require(!ks_.empty(), ErrorCode::kInvalidArgument, "backdoor proposer needs k choices");
  }

  std::optional<CandidateSpec> propose(ProposerAction action, const ProposerContext& ctx) override {
    if (ctx.problemClass != ProblemClass::kMaxSat) return std::nullopt;
    const int n = static_cast<int>(ks_.size());
    int k = ks_[static_cast<std::size_t>(ctx.slot % n)];
    const int parentK = paramOr(ctx.parent, "k", k);
    switch (action) {
      case ProposerAction::kSeed:
      case ProposerAction::kReplace:
        break;
      case ProposerAction::kRefine:
        k = parentK;
        break;
      case ProposerAction::kFork: {
        auto it = std::find(ks_.begin(), ks_.end(), parentK);
        int p = it == ks_.end() ? 0 : static_cast<int>(it - ks_.begin());
        k = ks_[static_cast<std::size_t>((p + 1) % n)];
        break;
      }
      case ProposerAction::kPushRuntime:
        k = std::max(0, parentK - 1);
        break;
      case ProposerAction::kPushQuality:
        k = std::min(kMaxEnumeratedBackdoor, parentK + 1);
        break;
    }
    CandidateSpec spec;
    const std::string ks = std::to_string(k);
    spec.hypothesis = {"Horn backdoor of size " + ks,
                       "A small set of variables carries the positive literals of the non-Horn "
                       "clauses.",
                       "Rank variables by how often they occur positively in non-Horn clauses.",
                       "Branch over the top " + ks + " variables and solve each Horn residual.",
                       "Residuals stay non-Horn when the set is wrong; the complete search then "
                       "does the work.",
                       "backdoor-k" + ks};
    spec.analysisSpecId = "salience-backdoor";
    spec.solverSpecId = "backdoor-sat";
    spec.params = {{"k", k}, {"maxFlips", 1000}};
    return spec;
  }

 private:
  std::vector<int> ks_;
};

class TwoOptRefiner : public Proposer {
 public:
  TwoOptRefiner(int starts, int maxPasses) : starts_(starts), passes_(maxPasses) {}

  std::optional<CandidateSpec> propose(ProposerAction action, const ProposerContext& ctx) override {
    if (ctx.problemClass != ProblemClass::kTsp) return std::nullopt;
    int starts = paramOr(ctx.parent, "starts", starts_);
    int passes = paramOr(ctx.parent, "maxPasses", passes_);
    switch (action) {
      case ProposerAction::kSeed:
        starts = starts_ << (ctx.slot % 3);
        passes = passes_;
        break;
      case ProposerAction::kReplace:
        starts = starts_;
        passes = passes_;
        break;
      case ProposerAction::kRefine:
        passes *= 2;
        break;
      case ProposerAction::kFork:
        starts += 1;
        break;
      case ProposerAction::kPushRuntime:
        starts = std::max(1, starts / 2);
        passes = std::max(1, passes / 2);
        break;
      case ProposerAction::kPushQuality:
        starts *= 2;
        break;
    }
    starts = std::min(starts, 64);
    passes = std::min(passes, 10000);
    CandidateSpec spec;
    const std::string s = std::to_string(starts);
    spec.hypothesis = {"Multistart 2-opt with " + s + " starts",
                       "Good tours are reachable from a few random starts by 2-opt moves.",
                       "None.",
                       "Run 2-opt from " + s + " random tours and keep the shortest.",
                       "Too few passes stop short of a local optimum.",
                       "2opt-starts-" + s};
    spec.analysisSpecId = "none";
    spec.solverSpecId = "multistart-2opt";
    spec.params = {{"starts", starts}, {"maxPasses", passes}};
    return spec;
  }

 private:
  int starts_;
  int passes_;
};

}  // namespace

std::string_view toString(ProposerAction a) { return kActionNames[static_cast<std::size_t>(a)]; }

ProposerAction parseProposerAction(std::string_view s) {
  for (std::size_t i = 0; i < kActionNames.size(); ++i)
    if (kActionNames[i] == s) return static_cast<ProposerAction>(i);
  throw Error(ErrorCode::kParse, "unknown proposer action '" + std::string(s) + "'");
}

std::unique_ptr<Proposer> makeCatalogProposer(bool includeExact) {
  return std::make_unique<CatalogProposer>(includeExact);
}

std::unique_ptr<Proposer> makeBackdoorProposer(std::vector<int> kChoices) {
  return std::make_unique<BackdoorProposer>(std::move(kChoices));
}

std::unique_ptr<Proposer> makeTwoOptRefiner(int starts, int maxPasses) {
  require(starts >= 1 && maxPasses >= 1, ErrorCode::kInvalidArgument,
          "2-opt refiner budgets must be positive");
  return std::make_unique<TwoOptRefiner>(starts, maxPasses);
}

std::unique_ptr<Proposer> makeProposer(const std::string& name) {
  if (name == "catalog") return makeCatalogProposer(false);
  if (name == "catalog+exact") return makeCatalogProposer(true);
  if (name == "backdoor") return makeBackdoorProposer();
  if (name == "2opt") return makeTwoOptRefiner();
  throw Error(ErrorCode::kNotFound, "unknown proposer '" + name + "'");
}

json toJson(const CandidateSpec& spec) {
  const auto& h = spec.hypothesis;
  return {{"hypothesis",
           {{"title", h.title},
            {"ruleSummary", h.ruleSummary},
            {"evidencePlan", h.evidencePlan},
            {"strategy", h.strategy},
            {"failureModes", h.failureModes},
            {"diversityKey", h.diversityKey}}},
          {"analysisSpecId", spec.analysisSpecId},
          {"solverSpecId", spec.solverSpecId},
          {"params", spec.params}};
}

CandidateSpec candidateSpecFromJson(const json& j) {
  try {
    CandidateSpec spec;
    const auto& h = j.at("hypothesis");
    spec.hypothesis = {h.value("title", ""),        h.value("ruleSummary", ""),
                       h.value("evidencePlan", ""), h.value("strategy", ""),
                       h.value("failureModes", ""), h.at("diversityKey").get<std::string>()};
    spec.analysisSpecId = j.value("analysisSpecId", "none");
    spec.solverSpecId = j.at("solverSpecId").get<std::string>();
    spec.params = j.value("params", json::object());
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("candidate spec: ") + e.what());
  }
}

namespace {

json toJson(const CandidateScore& s) {
  return {{"qVal", s.qVal}, {"oVal", s.oVal}, {"tValMs", s.tValMs}, {"failed", s.failed}};
}

}  // namespace

json toJson(const ProposerContext& ctx) {
  json j = {{"problemClass", toString(ctx.problemClass)}, {"round", ctx.round}, {"slot", ctx.slot}};
  if (ctx.parent) {
    const auto& p = *ctx.parent;
    json cases = json::array();
    for (const auto& fc : p.failureCases)
      cases.push_back({{"instance", hintforge::toJson(fc.instance)}, {"quality", fc.quality}});
    j["parent"] = {{"candidateId", p.candidateId}, {"spec", toJson(p.spec)},
                   {"summary", p.summary},         {"trainScore", toJson(p.trainScore)},
                   {"valScore", toJson(p.valScore)}, {"failureCases", cases}};
  }
  return j;
}

// ---------------------------------------------------------------------------
// Subprocess proposer

SubprocessProposer::SubprocessProposer(std::vector<std::string> argv) {
  require(!argv.empty(), ErrorCode::kInvalidArgument, "subprocess proposer needs a command");
  int sv[2];
  require(socketpair(AF_UNIX, SOCK_STREAM, 0, sv) == 0, ErrorCode::kIo, "socketpair failed");
  pid_ = fork();
  if (pid_ < 0) {
    close(sv[0]);
    close(sv[1]);
    throw Error(ErrorCode::kIo, "fork failed");
  }
  if (pid_ == 0) {
    close(sv[0]);
    dup2(sv[1], STDIN_FILENO);
    dup2(sv[1], STDOUT_FILENO);
    close(sv[1]);
    std::vector<char*> args;
    for (auto& a : argv) args.push_back(a.data());
    args.push_back(nullptr);
    execvp(args[0], args.data());
    _exit(127);
  }
  close(sv[1]);
  toChild_ = fromChild_ = sv[0];
}

SubprocessProposer::~SubprocessProposer() {
  if (toChild_ >= 0) {
    shutdown(toChild_, SHUT_RDWR);
    close(toChild_);
  }
  if (pid_ > 0) waitpid(pid_, nullptr, 0);
}

std::optional<CandidateSpec> SubprocessProposer::propose(ProposerAction action,
                                                         const ProposerContext& ctx) {
  std::string line = json{{"action", toString(action)}, {"context", toJson(ctx)}}.dump() + "\n";
  for (std::size_t off = 0; off < line.size();) {
    ssize_t w = send(toChild_, line.data() + off, line.size() - off, MSG_NOSIGNAL);
    if (w <= 0) throw Error(ErrorCode::kIo, "proposer process closed its input");
    off += static_cast<std::size_t>(w);
  }
  std::size_t nl;
  while ((nl = buffer_.find('\n')) == std::string::npos) {
    char chunk[4096];
    ssize_t r = read(fromChild_, chunk, sizeof chunk);
    if (r <= 0) throw Error(ErrorCode::kIo, "proposer process closed its output");
    buffer_.append(chunk, static_cast<std::size_t>(r));
  }
  std::string reply = buffer_.substr(0, nl);
  buffer_.erase(0, nl + 1);
  json j;
  try {
    j = json::parse(reply);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("proposer reply: ") + e.what());
  }
  if (j.is_null() || j.contains("error")) return std::nullopt;
  return candidateSpecFromJson(j);
}

// ---------------------------------------------------------------------------
// Loop

void SynthesisConfig::validate() const {
  require(rounds >= 1 && beamWidth >= 1 && budget >= 1, ErrorCode::kInvalidArgument,
          "R, B and K must be at least 1");
  require(failureRuntimeMs >= 0 && analysisTimeoutMs > 0, ErrorCode::kInvalidArgument,
          "runtimes must be positive");
}

namespace {

constexpr std::array<ProposerAction, 5> kRefinementCycle = {
    ProposerAction::kRefine, ProposerAction::kFork, ProposerAction::kReplace,
    ProposerAction::kPushRuntime, ProposerAction::kPushQuality};

std::string candidateId(int round, int slot) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "r%02d-s%02d", round, slot);
  return buf;
}

struct Materialized {
  AnalysisFn analysis;
  CandidateSolverFn solver;
};

void markFailed(Candidate& c, std::string reason, double failureRuntimeMs) {
  c.failed = true;
  c.failureReason = std::move(reason);
  c.score = {0, 0, failureRuntimeMs, true};
  c.trainScore = c.score;
}

std::vector<FailureCase> failureCases(const Candidate& c,
                                      const std::map<std::string, const Instance*>& valById) {
  std::vector<const InstanceLog*> logs;
  for (const auto& l : c.valLogs)
    if (l.crashed || l.quality < 1.0) logs.push_back(&l);
  std::sort(logs.begin(), logs.end(), [](const InstanceLog* a, const InstanceLog* b) {
    double qa = a->crashed ? 0 : a->quality, qb = b->crashed ? 0 : b->quality;
    return qa != qb ? qa < qb : a->instanceId < b->instanceId;
  });
  std::vector<FailureCase> out;
  for (std::size_t i = 0; i < logs.size() && i < 3; ++i)
    out.push_back({stripToPublic(*valById.at(logs[i]->instanceId)),
                   logs[i]->crashed ? 0.0 : logs[i]->quality});
  return out;
}

}  // namespace

SynthesisResult runSynthesis(Proposer& proposer, ProblemClass problemClass,
                             std::span<const Instance> train, std::span<const Instance> val,
                             const SynthesisConfig& cfg, const TemplateRegistry& registry) {
  cfg.validate();
  require(!val.empty(), ErrorCode::kInvalidArgument, "synthesis needs a validation split");
  std::set<std::string> trainIds;
  std::vector<PublicInstance> trainPub;
  for (const auto& x : train) {
    require(x.problemClass() == problemClass, ErrorCode::kUnsupportedClass,
            "training instance " + x.id() + " has the wrong class");
    trainIds.insert(x.id());
    trainPub.push_back(stripToPublic(x));
  }
  std::map<std::string, const Instance*> valById;
  for (const auto& x : val) {
    require(x.problemClass() == problemClass, ErrorCode::kUnsupportedClass,
            "validation instance " + x.id() + " has the wrong class");
    require(!trainIds.count(x.id()), ErrorCode::kInvalidArgument,
            "instance " + x.id() + " is in both train and validation");
    valById[x.id()] = &x;
  }
  const ClockMs clock = cfg.clock ? cfg.clock : ClockMs(steadyNowMs);
  ScoringOptions so{cfg.failureRuntimeMs, cfg.seed, clock, 1};

  SynthesisResult result;
  std::vector<Candidate>& archive = result.archive;
  std::vector<std::size_t> beam;
  std::vector<Materialized> built;

  for (int r = 0; r < cfg.rounds; ++r) {
    RoundLog log;
    log.round = r;
    std::vector<Candidate> fresh;
    for (int s = 0; s < cfg.budget; ++s) {
      ProposerContext ctx{problemClass, r, s, std::nullopt};
      ProposerAction action = ProposerAction::kSeed;
      if (!beam.empty()) {
        const Candidate& parent = archive[beam[static_cast<std::size_t>(s) % beam.size()]];
        action = kRefinementCycle[static_cast<std::size_t>(s) % kRefinementCycle.size()];
        ctx.parent = ParentContext{parent.id,         parent.spec,  parent.summary,
                                   parent.trainScore, parent.score, failureCases(parent, valById)};
      }
      std::optional<CandidateSpec> spec;
      try {
        spec = proposer.propose(action, ctx);
      } catch (const std::exception&) {
        spec.reset();
      }
      if (!spec) {
        ++log.failedPrompts;
        continue;
      }
      Candidate c;
      c.id = candidateId(r, s);
      c.round = r;
      c.spec = std::move(*spec);
      log.proposed.push_back(c.id);
      fresh.push_back(std::move(c));
    }

    std::vector<Materialized> mats(fresh.size());
    detail::parallelFor(fresh.size(), cfg.threads, [&](std::size_t i) {
      Candidate& c = fresh[i];
      try {
        mats[i].analysis = registry.analysis(c.spec.analysisSpecId, problemClass, c.spec.params);
        mats[i].solver = registry.solver(c.spec.solverSpecId, problemClass, c.spec.params);
      } catch (const std::exception& e) {
        markFailed(c, std::string("template: ") + e.what(), cfg.failureRuntimeMs);
        return;
      }
      double t0 = clock();
      try {
        c.summary = mats[i].analysis(trainPub);
      } catch (const std::exception& e) {
        markFailed(c, std::string("analysis: ") + e.what(), cfg.failureRuntimeMs);
        return;
      }
      c.analysisMs = std::max(0.0, clock() - t0);
      if (c.analysisMs > cfg.analysisTimeoutMs) {
        markFailed(c, "analysis timeout", cfg.failureRuntimeMs);
        return;
      }
      c.trainLogs = evaluateSolver(c.id, mats[i].solver, c.summary, train, so);
      c.valLogs = evaluateSolver(c.id, mats[i].solver, c.summary, val, so);
      c.trainScore = scoreFromLogs(c.trainLogs);
      c.score = scoreFromLogs(c.valLogs);
    });
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      archive.push_back(std::move(fresh[i]));
      built.push_back(std::move(mats[i]));
    }

    if (!archive.empty()) {
      beam = updateBeam(archive, cfg.beamWidth);
      for (std::size_t i : beam) log.survivors.push_back(archive[i].id);
      log.archiveBestId = archive[beam.front()].id;
      log.archiveBest = archive[beam.front()].score;
    }
    result.rounds.push_back(std::move(log));
  }

  if (archive.empty())
    throw Error(ErrorCode::kNoCandidate, "the proposer produced no candidate in any round");

  const std::size_t bestIndex = beam.front();
  result.best = archive[bestIndex];
  const Materialized& m = built[bestIndex];
  if (!result.best.failed) result.best.summary = m.analysis(trainPub);

  MeasuredSolver& d = result.deployed;
  d.id = result.best.id;
  d.problemClass = problemClass;
  d.config = toJson(result.best.spec);
  if (m.solver) {
    d.solve = [solver = m.solver, summary = result.best.summary](const PublicInstance& x,
                                                                  std::uint64_t seed) {
      return solver(x, summary, seed);
    };
  } else {
    d.solve = [reason = result.best.failureReason](const PublicInstance&,
                                                   std::uint64_t) -> SolveOutput {
      throw Error(ErrorCode::kNoCandidate, "selected candidate is unusable: " + reason);
    };
  }
  return result;
}

namespace {

json toJson(const std::vector<InstanceLog>& logs) {
  json out = json::array();
  for (const auto& l : logs)
    out.push_back({{"instanceId", l.instanceId},
                   {"quality", l.quality},
                   {"feasible", l.feasible},
                   {"optimal", l.optimal},
                   {"runtimeMs", l.runtimeMs},
                   {"crashed", l.crashed}});
  return out;
}

}  // namespace

json toJson(const Candidate& c, bool withLogs) {
  json j = {{"id", c.id},
            {"round", c.round},
            {"spec", toJson(c.spec)},
            {"summary", c.summary},
            {"failed", c.failed},
            {"failureReason", c.failureReason},
            {"analysisMs", c.analysisMs},
            {"trainScore", toJson(c.trainScore)},
            {"score", toJson(c.score)}};
  if (withLogs) {
    j["trainLogs"] = toJson(c.trainLogs);
    j["valLogs"] = toJson(c.valLogs);
  }
  return j;
}

json toJson(const SynthesisResult& r, bool withLogs) {
  json archive = json::array();
  for (const auto& c : r.archive) archive.push_back(toJson(c, withLogs));
  json rounds = json::array();
  for (const auto& l : r.rounds)
    rounds.push_back({{"round", l.round},
                      {"proposed", l.proposed},
                      {"failedPrompts", l.failedPrompts},
                      {"survivors", l.survivors},
                      {"archiveBestId", l.archiveBestId},
                      {"archiveBest", toJson(l.archiveBest)}});
  return {{"best", toJson(r.best, withLogs)}, {"rounds", rounds}, {"archive", archive}};
}

}  // namespace hintforge
