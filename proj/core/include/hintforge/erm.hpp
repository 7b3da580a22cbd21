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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hintforge/solvers.hpp"

namespace hintforge {

struct ErmConfig {
  double delta = 0.05;
  double tMaxMs = 10'000;
  /// Overrides solver priors by id; missing ids use MeasuredSolver::prior.
  std::map<std::string, double> prior;
  double failureRuntimeMs = 10'000;
  /// Seed for solver-local randomness.
  std::uint64_t seed = 0;
  /// Count a run as an error unless it is optimal, not just valid.
  bool requireOptimal = false;

  void validate() const;
};

/// A solver's measured runs over one sample, in sample order.
struct SolverRecord {
  std::string id;
  double prior = 1.0;
  std::vector<RunMeasurement> runs;
};

struct ErmEntry {
  std::string id;
  double prior = 0;
  double empiricalErr = 0;
  double empiricalRunMs = 0;
  int crashes = 0;
};

struct ErmSelection {
  /// Empty when no solver is sample-consistent.
  std::optional<std::string> chosenId;
  std::vector<ErmEntry> entries;  // library order
  int sampleSize = 0;
  double errBound = 0;
  /// Run-bound gap against each zero-error comparator.
  std::map<std::string, double> runBoundGapMs;

  const ErmEntry& entry(const std::string& id) const;
};

struct ErmBounds {
  double errBound = 0;
  std::map<std::string, double> runGapMs;
};

/// Fastest sample-consistent solver; ties go to the smallest id. Fills the
/// bounds when a solver is chosen.
ErmSelection selectErm(std::span<const SolverRecord> records, const ErmConfig& cfg);

/// Measures every library solver on every sample instance, then selects.
ErmSelection selectErm(std::span<const MeasuredSolver> library,
                       std::span<const Instance> sample, const ErmConfig& cfg,
                       const ClockMs& clock = {});

/// errBound = (Gamma(chosen) + ln(2/delta)) / n and, for each zero-error c,
/// runGap(c) = 2 Tmax sqrt((max(Gamma(chosen), Gamma(c)) + ln(4/delta)) / (2n)).
ErmBounds ermBounds(const ErmSelection& sel, int n, const ErmConfig& cfg);

nlohmann::json toJson(const ErmSelection& sel);

}  // namespace hintforge
