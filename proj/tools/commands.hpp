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
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hintforge/generators.hpp"

namespace CLI {
class App;
}

namespace hintforge::cli {

/// Raised when a run finishes but one of its checked invariants does not hold.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// HINTFORGE_SEED when set, otherwise kDefaultSeed.
std::uint64_t defaultSeed();

/// "all" selects every benchmark target; otherwise a comma list of
/// "<class>/<family>".
std::vector<FamilyInfo> parseTargets(const std::string& spec);

/// Writes to `path`, or to stdout when it is empty.
void emitJson(const nlohmann::json& j, const std::string& path);

void addDataCommands(CLI::App& app);
void addBenchCommands(CLI::App& app);

}  // namespace hintforge::cli
