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

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hintforge/instance.hpp"

namespace hintforge {

// Instance files are UTF-8 JSON:
//   {"id": ..., "problemClass": ..., "public": {...}, "evaluator": {...}}
// The public-only variant omits "evaluator".

nlohmann::json toJson(const PublicInstance& inst);
nlohmann::json toJson(const Instance& inst);
nlohmann::json toJson(const Solution& sol);
nlohmann::json toJson(const EvaluatorData& eval, ProblemClass c);

PublicInstance publicFromJson(const nlohmann::json& j);
Instance instanceFromJson(const nlohmann::json& j);
Solution solutionFromJson(const nlohmann::json& j);

/// Canonical text of a JSON value (sorted keys, no whitespace), used for
/// byte-determinism checks and hashing.
std::string canonicalDump(const nlohmann::json& j);

void writeInstanceFile(const std::filesystem::path& path, const Instance& inst);
void writePublicFile(const std::filesystem::path& path, const PublicInstance& inst);
Instance readInstanceFile(const std::filesystem::path& path);
/// Reads either variant and returns the public part.
PublicInstance readPublicFile(const std::filesystem::path& path);

nlohmann::json readJsonFile(const std::filesystem::path& path);
void writeJsonFile(const std::filesystem::path& path, const nlohmann::json& j);

// DIMACS cnf.
void writeDimacs(std::ostream& os, const CnfFormula& f);
CnfFormula readDimacs(std::istream& is);
std::string toDimacs(const CnfFormula& f);
CnfFormula fromDimacs(const std::string& text);

}  // namespace hintforge
