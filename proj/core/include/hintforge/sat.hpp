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
#include <span>
#include <vector>

#include "hintforge/instance.hpp"

namespace hintforge {

struct SatResult {
  bool satisfiable = false;
  /// Full assignment over all variables when satisfiable (index i = var i+1).
  std::vector<bool> assignment;
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
};

bool isHornClause(std::span<const int> clause);
bool isHorn(const CnfFormula& f);
bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

/// Linear-time Horn-SAT: forced-true propagation from clauses without
/// unsatisfied negative literals; everything left is false. Rejects non-Horn
/// input with kInvalidArgument.
SatResult hornSat(const CnfFormula& f);

/// Complete DPLL: unit propagation, pure-literal elimination, and branching
/// on the lowest-index unassigned variable with true tried first.
SatResult dpll(const CnfFormula& f);

struct Restriction {
  /// Residual over the same variable range; assigned variables no longer occur.
  CnfFormula residual;
  /// Some clause lost all of its literals.
  bool conflict = false;
};

/// F restricted by setting 0-based `vars[i]` to `values[i]`: a true literal
/// drops its clause, a false literal is dropped from its clause.
Restriction restrictFormula(const CnfFormula& f, std::span<const int> vars,
                            const std::vector<bool>& values);

}  // namespace hintforge
