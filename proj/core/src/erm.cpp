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

#include "hintforge/erm.hpp"

#include <cmath>

#include "hintforge/error.hpp"

namespace hintforge {

void ErmConfig::validate() const {
  require(delta > 0 && delta < 1, ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  require(tMaxMs > 0, ErrorCode::kInvalidArgument, "tMaxMs must be positive");
  require(failureRuntimeMs >= 0, ErrorCode::kInvalidArgument,
          "failureRuntimeMs must be nonnegative");
  double total = 0;
  for (const auto& [id, p] : prior) {
    require(p >= 0 && p <= 1, ErrorCode::kInvalidArgument, "prior of " + id + " outside [0, 1]");
    total += p;
  }
  require(total <= 1 + 1e-12, ErrorCode::kInvalidArgument, "priors sum above 1");
}

const ErmEntry& ErmSelection::entry(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw Error(ErrorCode::kNotFound, "no ERM entry for solver '" + id + "'");
}

namespace {

double gammaOf(double prior) {
  require(prior > 0, ErrorCode::kInvalidArgument, "prior must be positive for a bound");
  return std::log(1.0 / prior);
}

}  // namespace

ErmSelection selectErm(std::span<const SolverRecord> records, const ErmConfig& cfg) {
  cfg.validate();
  require(!records.empty(), ErrorCode::kInvalidArgument, "selectErm: empty library");
  const std::size_t n = records.front().runs.size();
  require(n > 0, ErrorCode::kInvalidArgument, "selectErm: empty sample");

  ErmSelection sel;
  sel.sampleSize = static_cast<int>(n);
  double priorTotal = 0;
  for (const auto& r : records) {
    require(r.runs.size() == n, ErrorCode::kShapeMismatch,
            "selectErm: solver " + r.id + " has a different number of runs");
    ErmEntry e;
    e.id = r.id;
    auto it = cfg.prior.find(r.id);
    e.prior = it != cfg.prior.end() ? it->second : r.prior;
    priorTotal += e.prior;
    int errors = 0;
    double ms = 0;
    for (const auto& m : r.runs) {
      bool ok = !m.crashed && m.scored.feasible && (!cfg.requireOptimal || m.scored.optimal);
      errors += !ok;
      e.crashes += m.crashed;
      ms += m.crashed ? cfg.failureRuntimeMs : m.wallClockMs;
    }
    e.empiricalErr = static_cast<double>(errors) / n;
    e.empiricalRunMs = ms / n;
    sel.entries.push_back(e);
  }
  require(priorTotal <= 1 + 1e-12, ErrorCode::kInvalidArgument, "library priors sum above 1");

  const ErmEntry* best = nullptr;
  for (const auto& e : sel.entries) {
    if (e.empiricalErr != 0) continue;
    if (!best || e.empiricalRunMs < best->empiricalRunMs ||
        (e.empiricalRunMs == best->empiricalRunMs && e.id < best->id))
      best = &e;
  }
  if (best) {
    sel.chosenId = best->id;
    if (best->prior > 0) {
      auto bounds = ermBounds(sel, static_cast<int>(n), cfg);
      sel.errBound = bounds.errBound;
      sel.runBoundGapMs = std::move(bounds.runGapMs);
    }
  }
  return sel;
}

ErmSelection selectErm(std::span<const MeasuredSolver> library,
                       std::span<const Instance> sample, const ErmConfig& cfg,
                       const ClockMs& clock) {
  require(!library.empty(), ErrorCode::kInvalidArgument, "selectErm: empty library");
  require(!sample.empty(), ErrorCode::kInvalidArgument, "selectErm: empty sample");
  std::vector<SolverRecord> records;
  for (const auto& s : library) {
    SolverRecord r{s.id, s.prior, {}};
    for (const auto& inst : sample) {
      RunOptions opt;
      opt.failureRuntimeMs = cfg.failureRuntimeMs;
      opt.seed = solverSeed(cfg.seed, s.id, inst.id());
      opt.clock = clock;
      r.runs.push_back(runMeasured(s, inst, opt));
    }
    records.push_back(std::move(r));
  }
  return selectErm(records, cfg);
}

ErmBounds ermBounds(const ErmSelection& sel, int n, const ErmConfig& cfg) {
  require(n >= 1, ErrorCode::kInvalidArgument, "bounds need n >= 1");
  require(sel.chosenId.has_value(), ErrorCode::kNoCandidate, "no sample-consistent solver");
  const auto& chosen = sel.entry(*sel.chosenId);
  const double gChosen = gammaOf(chosen.prior);
  ErmBounds out;
  out.errBound = (gChosen + std::log(2.0 / cfg.delta)) / n;
  for (const auto& e : sel.entries) {
    if (e.empiricalErr != 0 || e.prior <= 0) continue;
    double g = std::max(gChosen, gammaOf(e.prior));
    out.runGapMs[e.id] = 2 * cfg.tMaxMs * std::sqrt((g + std::log(4.0 / cfg.delta)) / (2.0 * n));
  }
  return out;
}

nlohmann::json toJson(const ErmSelection& sel) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : sel.entries)
    entries.push_back({{"id", e.id},
                       {"prior", e.prior},
                       {"empiricalErr", e.empiricalErr},
                       {"empiricalRunMs", e.empiricalRunMs},
                       {"crashes", e.crashes}});
  nlohmann::json j = {{"chosenId", sel.chosenId ? nlohmann::json(*sel.chosenId) : nlohmann::json()},
                      {"outcome", sel.chosenId ? "selected" : "no-feasible-solver"},
                      {"sampleSize", sel.sampleSize},
                      {"entries", entries},
                      {"errBound", sel.errBound},
                      {"runBoundGapMs", sel.runBoundGapMs}};
  return j;
}

}  // namespace hintforge
