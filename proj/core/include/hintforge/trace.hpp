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

#include <nlohmann/json.hpp>

namespace hintforge {

/// Per-solve diagnostics reported through a common interface. What counts as
/// a shortcut or a residual is up to each solver.
struct DiagnosticTrace {
  bool shortcutUsed = false;
  bool fallbackUsed = false;
  double residualSize = 0;
  int repairIterations = 0;

  friend bool operator==(const DiagnosticTrace&, const DiagnosticTrace&) = default;
};

inline nlohmann::json toJson(const DiagnosticTrace& t) {
  return {{"shortcutUsed", t.shortcutUsed},
          {"fallbackUsed", t.fallbackUsed},
          {"residualSize", t.residualSize},
          {"repairIterations", t.repairIterations}};
}

inline DiagnosticTrace traceFromJson(const nlohmann::json& j) {
  DiagnosticTrace t;
  t.shortcutUsed = j.at("shortcutUsed").get<bool>();
  t.fallbackUsed = j.at("fallbackUsed").get<bool>();
  t.residualSize = j.at("residualSize").get<double>();
  t.repairIterations = j.at("repairIterations").get<int>();
  return t;
}

}  // namespace hintforge
