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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hintforge/instance.hpp"
#include "hintforge/solvers.hpp"

namespace hintforge {

struct Hypothesis {
  std::string title;
  std::string ruleSummary;
  std::string evidencePlan;
  std::string strategy;
  std::string failureModes;
  std::string diversityKey;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

using Summary = nlohmann::json;
using AnalysisFn = std::function<Summary(std::span<const PublicInstance>)>;
using CandidateSolverFn =
    std::function<SolveOutput(const PublicInstance&, const Summary&, std::uint64_t seed)>;

/// What a proposer returns: a hypothesis plus registered template ids.
struct CandidateSpec {
  Hypothesis hypothesis;
  std::string analysisSpecId = "none";
  std::string solverSpecId;
  nlohmann::json params = nlohmann::json::object();
};

/// Named analysis and solver templates that candidate specs refer to.
class TemplateRegistry {
 public:
  using AnalysisFactory = std::function<AnalysisFn(ProblemClass, const nlohmann::json& params)>;
  using SolverFactory =
      std::function<CandidateSolverFn(ProblemClass, const nlohmann::json& params)>;

  /// Built-ins: analyses "none", "salience-backdoor"; solvers "catalog:<id>",
  /// "exact", "backdoor-sat", "multistart-2opt".
  static TemplateRegistry builtin();

  void addAnalysis(const std::string& id, AnalysisFactory f);
  void addSolver(const std::string& id, SolverFactory f);

  AnalysisFn analysis(const std::string& id, ProblemClass c, const nlohmann::json& params) const;
  CandidateSolverFn solver(const std::string& id, ProblemClass c,
                           const nlohmann::json& params) const;

 private:
  std::map<std::string, AnalysisFactory> analyses_;
  std::map<std::string, SolverFactory> solvers_;
};

struct InstanceLog {
  std::string instanceId;
  double quality = 0;
  bool feasible = false;
  bool optimal = false;
  double runtimeMs = 0;
  bool crashed = false;
};

struct CandidateScore {
  double qVal = 0;
  double oVal = 0;
  double tValMs = 0;
  bool failed = false;

  friend bool operator==(const CandidateScore&, const CandidateScore&) = default;
};

/// Lexicographic (Q, O, -T); true when a ranks strictly above b.
bool scoreBetter(const CandidateScore& a, const CandidateScore& b);

/// Means over per-instance logs; crashed instances count as quality 0.
CandidateScore scoreFromLogs(std::span<const InstanceLog> logs);

struct ScoringOptions {
  double failureRuntimeMs = 10'000;
  std::uint64_t seed = 0;
  ClockMs clock;
  int threads = 1;
};

/// Runs the solver on every instance behind an exception barrier.
std::vector<InstanceLog> evaluateSolver(const std::string& candidateId,
                                        const CandidateSolverFn& solver, const Summary& summary,
                                        std::span<const Instance> evalSet,
                                        const ScoringOptions& opt);

struct Candidate {
  std::string id;
  int round = 0;
  CandidateSpec spec;
  Summary summary;
  bool failed = false;
  std::string failureReason;
  double analysisMs = 0;
  CandidateScore trainScore;
  CandidateScore score;  // validation
  std::vector<InstanceLog> trainLogs;
  std::vector<InstanceLog> valLogs;
};

/// Ranking order used everywhere: score, then candidate id.
bool candidateRanksAbove(const Candidate& a, const Candidate& b);

/// Pass 1 keeps the best candidate per diversity key (best keys first, up to
/// beamWidth); pass 2 fills the remaining slots by rank. Returns indices into
/// `pool`, best first.
std::vector<std::size_t> updateBeam(std::span<const Candidate> pool, int beamWidth);

enum class ProposerAction { kSeed, kRefine, kFork, kReplace, kPushRuntime, kPushQuality };

std::string_view toString(ProposerAction a);
ProposerAction parseProposerAction(std::string_view s);

struct FailureCase {
  PublicInstance instance;
  double quality = 0;
};

struct ParentContext {
  std::string candidateId;
  CandidateSpec spec;
  Summary summary;
  CandidateScore trainScore;
  CandidateScore valScore;
  std::vector<FailureCase> failureCases;
};

struct ProposerContext {
  ProblemClass problemClass = ProblemClass::kColoring;
  int round = 0;
  int slot = 0;
  std::optional<ParentContext> parent;
};

nlohmann::json toJson(const ProposerContext& ctx);

class Proposer {
 public:
  virtual ~Proposer() = default;
  /// nullopt or an exception counts as a failed prompt.
  virtual std::optional<CandidateSpec> propose(ProposerAction action,
                                               const ProposerContext& ctx) = 0;
};

/// Walks the heuristic catalog of the class; optionally includes "exact".
std::unique_ptr<Proposer> makeCatalogProposer(bool includeExact = false);
/// Salience analysis with varying k and the compiled backdoor solver.
std::unique_ptr<Proposer> makeBackdoorProposer(std::vector<int> kChoices = {0, 1, 2, 3, 4});
/// Mutates multistart 2-opt budgets.
std::unique_ptr<Proposer> makeTwoOptRefiner(int starts = 4, int maxPasses = 200);
std::unique_ptr<Proposer> makeProposer(const std::string& name);

/// Talks to an external program: one JSON request line out, one response line in.
class SubprocessProposer : public Proposer {
 public:
  explicit SubprocessProposer(std::vector<std::string> argv);
  ~SubprocessProposer() override;
  SubprocessProposer(const SubprocessProposer&) = delete;
  SubprocessProposer& operator=(const SubprocessProposer&) = delete;

  std::optional<CandidateSpec> propose(ProposerAction action,
                                       const ProposerContext& ctx) override;

 private:
  int pid_ = -1;
  int toChild_ = -1;
  int fromChild_ = -1;
  std::string buffer_;
};

CandidateSpec candidateSpecFromJson(const nlohmann::json& j);
nlohmann::json toJson(const CandidateSpec& spec);

struct SynthesisConfig {
  int rounds = 4;     // R
  int beamWidth = 4;  // B
  int budget = 8;     // K
  double failureRuntimeMs = 10'000;
  double analysisTimeoutMs = 60'000;
  std::uint64_t seed = 0;
  int threads = 1;
  ClockMs clock;

  void validate() const;
};

struct RoundLog {
  int round = 0;
  std::vector<std::string> proposed;
  int failedPrompts = 0;
  std::vector<std::string> survivors;
  std::string archiveBestId;
  CandidateScore archiveBest;
};

struct SynthesisResult {
  Candidate best;  // summary re-computed on the training split
  std::vector<Candidate> archive;
  std::vector<RoundLog> rounds;
  /// Deployable solver bound to best.summary.
  MeasuredSolver deployed;
};

/// Uses only the public parts of `train` for analysis; `val` supplies the
/// ranking score. No test data enters.
SynthesisResult runSynthesis(Proposer& proposer, ProblemClass problemClass,
                             std::span<const Instance> train, std::span<const Instance> val,
                             const SynthesisConfig& cfg,
                             const TemplateRegistry& registry = TemplateRegistry::builtin());

nlohmann::json toJson(const Candidate& c, bool withLogs = true);
nlohmann::json toJson(const SynthesisResult& r, bool withLogs = true);

}  // namespace hintforge
