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

#include <gtest/gtest.h>

#include "hintforge/erm.hpp"
#include "hintforge/error.hpp"
#include "hintforge/generators.hpp"
#include "hintforge/serialize.hpp"
#include "hintforge/synthesis.hpp"

namespace hintforge {
namespace {

// Time only moves when a stub solver says so, which makes runtimes and
// therefore rankings exactly reproducible.
thread_local double virtualNow = 0;
double virtualClock() { return virtualNow; }

Candidate cand(std::string id, std::string key, double q, double o, double t) {
  Candidate c;
  c.id = std::move(id);
  c.spec.hypothesis.diversityKey = std::move(key);
  c.score = {q, o, t, false};
  return c;
}

std::vector<Instance> split(ProblemClass c, const char* family, const char* name, int n,
                            std::uint64_t seed = 6) {
  FamilySpec spec{c, family, SizeProfile::kDesk, {}, seed};
  std::vector<Instance> out;
  for (int i = 0; i < n; ++i) out.push_back(generateInstance(spec, name, i));
  return out;
}

TEST(Score, LexicographicOrder) {
  EXPECT_TRUE(scoreBetter({0.9, 0, 100}, {0.8, 1, 1}));
  EXPECT_TRUE(scoreBetter({0.9, 0.5, 100}, {0.9, 0.4, 1}));
  EXPECT_TRUE(scoreBetter({0.9, 0.5, 1}, {0.9, 0.5, 2}));
  EXPECT_FALSE(scoreBetter({0.9, 0.5, 2}, {0.9, 0.5, 2}));
}

TEST(Score, FromLogsCountsCrashesAsZero) {
  std::vector<InstanceLog> logs{{"a", 1.0, true, true, 4, false}, {"b", 0.8, true, false, 6, true}};
  auto s = scoreFromLogs(logs);
  EXPECT_DOUBLE_EQ(s.qVal, 0.5);
  EXPECT_DOUBLE_EQ(s.oVal, 0.5);
  EXPECT_DOUBLE_EQ(s.tValMs, 5);
}

TEST(Beam, DiversityFirstThenRank) {
  std::vector<Candidate> pool{
      cand("c0", "x", 0.9, 0, 1), cand("c1", "x", 0.95, 0, 1), cand("c2", "y", 0.5, 0, 1),
      cand("c3", "z", 0.7, 0, 1), cand("c4", "x", 0.92, 0, 1),
  };
  EXPECT_EQ(updateBeam(pool, 2), (std::vector<std::size_t>{1, 3}));
  // c4 only enters in the second pass; the result is still ordered best first.
  EXPECT_EQ(updateBeam(pool, 4), (std::vector<std::size_t>{1, 4, 3, 2}));
  EXPECT_EQ(updateBeam(pool, 3), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(updateBeam(pool, 10).size(), 5U);
  EXPECT_TRUE(updateBeam({}, 3).empty());
}

TEST(Beam, IdBreaksScoreTies) {
  std::vector<Candidate> pool{cand("b", "k1", 1, 1, 1), cand("a", "k2", 1, 1, 1)};
  EXPECT_EQ(updateBeam(pool, 1), (std::vector<std::size_t>{1}));
}

TEST(Actions, RoundTrip) {
  for (auto a : {ProposerAction::kSeed, ProposerAction::kRefine, ProposerAction::kFork,
                 ProposerAction::kReplace, ProposerAction::kPushRuntime,
                 ProposerAction::kPushQuality})
    EXPECT_EQ(parseProposerAction(toString(a)), a);
  EXPECT_THROW(parseProposerAction("explode"), Error);
}

TEST(Spec, JsonRoundTrip) {
  CandidateSpec s;
  s.hypothesis = {"t", "r", "e", "s", "f", "key"};
  s.analysisSpecId = "salience-backdoor";
  s.solverSpecId = "backdoor-sat";
  s.params = {{"k", 2}};
  auto back = candidateSpecFromJson(toJson(s));
  EXPECT_EQ(back.hypothesis, s.hypothesis);
  EXPECT_EQ(back.solverSpecId, s.solverSpecId);
  EXPECT_EQ(back.params, s.params);
  EXPECT_THROW(candidateSpecFromJson({{"hypothesis", {}}}), Error);
}

// Registry whose solvers return the planted optimum or nothing, and spend a
// fixed virtual time.
TemplateRegistry stubRegistry() {
  auto reg = TemplateRegistry::builtin();
  reg.addSolver("stub", [](ProblemClass, const nlohmann::json& p) -> CandidateSolverFn {
    const double ms = p.at("ms").get<double>();
    const bool good = p.at("good").get<bool>();
    return [ms, good](const PublicInstance& x, const Summary&, std::uint64_t) {
      virtualNow += ms;
      if (!good) throw std::runtime_error("stub failure");
      auto r = solveExact(x);
      return SolveOutput{r.solution, {}};
    };
  });
  reg.addAnalysis("explode", [](ProblemClass, const nlohmann::json&) -> AnalysisFn {
    return [](std::span<const PublicInstance>) -> Summary { throw std::runtime_error("bad"); };
  });
  return reg;
}

class ListProposer : public Proposer {
 public:
  explicit ListProposer(std::vector<std::optional<CandidateSpec>> specs) : specs_(std::move(specs)) {}
  std::optional<CandidateSpec> propose(ProposerAction, const ProposerContext&) override {
    auto s = specs_[next_ % specs_.size()];
    ++next_;
    return s;
  }

 private:
  std::vector<std::optional<CandidateSpec>> specs_;
  std::size_t next_ = 0;
};

CandidateSpec stub(const std::string& key, double ms, bool good,
                   const std::string& analysis = "none") {
  CandidateSpec s;
  s.hypothesis.diversityKey = key;
  s.analysisSpecId = analysis;
  s.solverSpecId = "stub";
  s.params = {{"ms", ms}, {"good", good}};
  return s;
}

SynthesisConfig virtualConfig() {
  SynthesisConfig cfg;
  cfg.rounds = 2;
  cfg.beamWidth = 2;
  cfg.budget = 3;
  cfg.clock = virtualClock;
  cfg.seed = 11;
  return cfg;
}

TEST(Synthesis, PicksFastestCorrectStub) {
  auto train = split(ProblemClass::kMis, "core-fringe", "train", 3);
  auto val = split(ProblemClass::kMis, "core-fringe", "val", 2);
  ListProposer p({stub("slow", 5, true), stub("broken", 1, false), stub("fast", 2, true),
                  std::nullopt, stub("bad-analysis", 1, true, "explode")});
  auto res = runSynthesis(p, ProblemClass::kMis, train, val, virtualConfig(), stubRegistry());
  EXPECT_EQ(res.best.spec.hypothesis.diversityKey, "fast");
  EXPECT_DOUBLE_EQ(res.best.score.tValMs, 2);
  EXPECT_EQ(res.rounds.size(), 2U);
  EXPECT_EQ(res.rounds[1].failedPrompts, 1);
  bool sawFailed = false;
  for (const auto& c : res.archive)
    if (c.spec.analysisSpecId == "explode") {
      sawFailed = true;
      EXPECT_TRUE(c.failed);
      EXPECT_TRUE(c.score.failed);
      EXPECT_EQ(c.score.tValMs, 10'000);
    }
  EXPECT_TRUE(sawFailed);
  for (std::size_t r = 1; r < res.rounds.size(); ++r)
    EXPECT_FALSE(scoreBetter(res.rounds[r - 1].archiveBest, res.rounds[r].archiveBest));
  EXPECT_EQ(res.deployed.id, res.best.id);
}

TEST(Synthesis, AgreesWithErmOnStubLibrary) {
  auto train = split(ProblemClass::kMis, "clique-path", "train", 3);
  auto val = split(ProblemClass::kMis, "clique-path", "val", 3);
  std::vector<CandidateSpec> specs{stub("a", 7, true), stub("b", 3, true), stub("c", 1, false),
                                   stub("d", 4, true)};
  std::vector<std::optional<CandidateSpec>> opt(specs.begin(), specs.end());
  ListProposer p(opt);
  auto cfg = virtualConfig();
  cfg.rounds = 1;
  cfg.budget = 4;
  cfg.beamWidth = 4;
  auto reg = stubRegistry();
  auto res = runSynthesis(p, ProblemClass::kMis, train, val, cfg, reg);

  std::vector<MeasuredSolver> lib;
  for (const auto& s : specs) {
    auto fn = reg.solver("stub", ProblemClass::kMis, s.params);
    lib.push_back({s.hypothesis.diversityKey, ProblemClass::kMis,
                   [fn](const PublicInstance& x, std::uint64_t seed) { return fn(x, {}, seed); },
                   0.25});
  }
  ErmConfig ecfg;
  ecfg.requireOptimal = true;
  auto sel = selectErm(lib, val, ecfg, virtualClock);
  ASSERT_TRUE(sel.chosenId.has_value());
  EXPECT_EQ(*sel.chosenId, res.best.spec.hypothesis.diversityKey);
}

TEST(Synthesis, SingleCandidateAndEmptyTrain) {
  auto val = split(ProblemClass::kMis, "core-fringe", "val", 2);
  ListProposer p({stub("only", 1, true)});
  SynthesisConfig cfg;
  cfg.rounds = cfg.beamWidth = cfg.budget = 1;
  cfg.clock = virtualClock;
  auto res = runSynthesis(p, ProblemClass::kMis, {}, val, cfg, stubRegistry());
  EXPECT_EQ(res.archive.size(), 1U);
  EXPECT_EQ(res.best.id, "r00-s00");
}

TEST(Synthesis, InputValidation) {
  auto train = split(ProblemClass::kMis, "core-fringe", "train", 2);
  auto val = split(ProblemClass::kMis, "core-fringe", "val", 2);
  ListProposer p({stub("only", 1, true)});
  auto cfg = virtualConfig();
  EXPECT_THROW(runSynthesis(p, ProblemClass::kMis, train, {}, cfg, stubRegistry()), Error);
  EXPECT_THROW(runSynthesis(p, ProblemClass::kMds, train, val, cfg, stubRegistry()), Error);
  EXPECT_THROW(runSynthesis(p, ProblemClass::kMis, train, train, cfg, stubRegistry()), Error);
  ListProposer none({std::nullopt});
  try {
    runSynthesis(none, ProblemClass::kMis, train, val, cfg, stubRegistry());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoCandidate);
  }
  cfg.budget = 0;
  EXPECT_THROW(runSynthesis(p, ProblemClass::kMis, train, val, cfg, stubRegistry()), Error);
}

TEST(Synthesis, HiddenFieldsDoNotLeak) {
  auto train = split(ProblemClass::kMaxSat, "latent-backdoor", "train", 4);
  auto val = split(ProblemClass::kMaxSat, "latent-backdoor", "val", 3);
  auto cfg = virtualConfig();
  auto p1 = makeBackdoorProposer();
  auto a = canonicalDump(toJson(runSynthesis(*p1, ProblemClass::kMaxSat, train, val, cfg)));
  for (auto* s : {&train, &val})
    for (auto& inst : *s) {
      inst.eval.familyId = "poisoned";
      inst.eval.hiddenMetadata = {{"backdoor", {0, 1, 2}}, {"poison", true}};
    }
  auto p2 = makeBackdoorProposer();
  auto b = canonicalDump(toJson(runSynthesis(*p2, ProblemClass::kMaxSat, train, val, cfg)));
  EXPECT_EQ(a, b);
}

TEST(Synthesis, ByteReproducibleWithFixedClock) {
  auto train = split(ProblemClass::kTsp, "latent-metric", "train", 2);
  auto val = split(ProblemClass::kTsp, "latent-metric", "val", 2);
  auto cfg = virtualConfig();
  auto run = [&] {
    auto p = makeProposer("2opt");
    return canonicalDump(toJson(runSynthesis(*p, ProblemClass::kTsp, train, val, cfg)));
  };
  EXPECT_EQ(run(), run());
}

TEST(Proposers, CatalogWalksLibrary) {
  auto p = makeCatalogProposer(true);
  ProposerContext ctx;
  ctx.problemClass = ProblemClass::kMis;
  auto ids = solverIds(ProblemClass::kMis);
  for (std::size_t s = 0; s < ids.size(); ++s) {
    ctx.slot = static_cast<int>(s);
    auto spec = p->propose(ProposerAction::kSeed, ctx);
    ASSERT_TRUE(spec.has_value());
    EXPECT_EQ(spec->hypothesis.diversityKey, ids[s]);
  }
  EXPECT_THROW(makeProposer("oracle"), Error);
}

TEST(Proposers, BackdoorOnlyForMaxSat) {
  auto p = makeBackdoorProposer();
  ProposerContext ctx;
  ctx.problemClass = ProblemClass::kTsp;
  EXPECT_FALSE(p->propose(ProposerAction::kSeed, ctx).has_value());
  ctx.problemClass = ProblemClass::kMaxSat;
  auto spec = p->propose(ProposerAction::kSeed, ctx);
  ASSERT_TRUE(spec.has_value());
  EXPECT_EQ(spec->solverSpecId, "backdoor-sat");
}

TEST(Proposers, Subprocess) {
  SubprocessProposer p({"/bin/sh", "-c",
                        "read l; echo '{\"hypothesis\":{\"diversityKey\":\"sh\"},"
                        "\"solverSpecId\":\"catalog:dsatur\"}'; read l; echo '{\"error\":\"no\"}'"});
  ProposerContext ctx;
  auto a = p.propose(ProposerAction::kSeed, ctx);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->solverSpecId, "catalog:dsatur");
  EXPECT_FALSE(p.propose(ProposerAction::kRefine, ctx).has_value());
  // The child has exited; further prompts fail instead of hanging.
  EXPECT_ANY_THROW(p.propose(ProposerAction::kRefine, ctx));
}

}  // namespace
}  // namespace hintforge
