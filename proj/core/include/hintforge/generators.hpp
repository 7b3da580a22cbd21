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
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hintforge/instance.hpp"
#include "hintforge/oracles.hpp"

namespace hintforge {

enum class SizeProfile { kPaper, kDesk };

std::string_view toString(SizeProfile p);
SizeProfile parseSizeProfile(std::string_view name);

/// One registered target distribution.
struct FamilyInfo {
  ProblemClass problemClass;
  std::string name;         // slug, e.g. "ring-template"
  std::string displayName;  // e.g. "Ring-template"
  bool benchmarkTarget;     // one of the 21 benchmark targets
};

/// The 21 benchmark targets followed by auxiliary families.
const std::vector<FamilyInfo>& familyRegistry();
const FamilyInfo& findFamily(ProblemClass c, std::string_view name);

struct FamilySpec {
  ProblemClass problemClass = ProblemClass::kColoring;
  std::string familyName;
  SizeProfile profile = SizeProfile::kDesk;
  /// Overrides merged (JSON merge-patch) over the family defaults.
  nlohmann::json familyParams = nlohmann::json::object();
  std::uint64_t seed = 0;
};

struct SplitSpec {
  int nTrain = 64;
  int nVal = 32;
  int nTest = 500;
};

struct GenerateOptions {
  /// Budget for oracle certification of each desk-profile instance.
  OracleBudget certifyBudget{10.0, 2'000'000'000};
  /// Re-derive desk-profile optima with the exact oracles.
  bool certify = true;
  /// Worker threads for per-instance generation; 0 = hardware concurrency.
  int threads = 0;
};

struct TargetDataset {
  FamilySpec spec;
  SplitSpec split;
  nlohmann::json effectiveParams;
  std::string specHash;
  std::vector<Instance> train;
  std::vector<Instance> val;
  std::vector<Instance> test;

  std::string targetName() const;  // "<class>/<family>"
};

/// Effective parameters (defaults plus overrides) for a family spec.
nlohmann::json familyParameters(const FamilySpec& spec);

/// Generates one instance of a target; `split` and `index` pick its stream.
Instance generateInstance(const FamilySpec& spec, std::string_view split, int index);

/// Deterministic train/val/test dataset. Desk-profile optima are re-derived
/// by the exact oracles and any disagreement aborts generation.
TargetDataset generateTarget(const FamilySpec& spec, const SplitSpec& split,
                             const GenerateOptions& options = {});

/// Certifies one instance against the exact oracle; throws kGeneration on
/// refutation or oracle timeout.
void certifyWithOracle(const Instance& inst, const OracleBudget& budget);

// Planted Horn-backdoor family.

struct HornBackdoorParams {
  int d = 12;
  int k = 2;
  int numClauses = 48;
  double rho = 0.5;
  int hornWidth = 3;
  int tailSize = 2;

  void validate() const;
  /// Separation margin rho * (1/k - 1/(d-k)).
  double margin() const;
};

struct HornBackdoorFormula {
  CnfFormula formula;
  std::vector<int> backdoor;  // sorted 0-based variable indices
};

HornBackdoorFormula generateHornBackdoorFormula(const HornBackdoorParams& params,
                                                std::uint64_t seed);

/// Draws `count` formulas sharing one hidden backdoor (the family D_B).
std::vector<HornBackdoorFormula> sampleHornBackdoorFamily(const HornBackdoorParams& params,
                                                          int count, std::uint64_t seed);

/// True iff every restriction of `f` over `vars` leaves only Horn clauses.
bool isStrongHornBackdoor(const CnfFormula& f, const std::vector<int>& vars);

/// Short stable hex digest of a JSON value.
std::string digestHex(const nlohmann::json& j);

}  // namespace hintforge
