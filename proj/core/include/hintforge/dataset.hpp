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
#include <map>
#include <string>
#include <vector>

#include "hintforge/generators.hpp"

namespace hintforge {

// On disk a target is DIR/manifest.json plus DIR/<split>/<id>.json for the
// splits train, val and test.

struct DatasetManifest {
  FamilySpec spec;
  SplitSpec split;
  nlohmann::json effectiveParams;
  std::string specHash;
  std::map<std::string, std::vector<std::string>> ids;  // split -> instance ids

  std::string targetName() const;
};

void writeDataset(const std::filesystem::path& dir, const TargetDataset& ds);

DatasetManifest readManifest(const std::filesystem::path& dir);

/// Loads one split ("train", "val" or "test") in manifest order.
std::vector<Instance> loadSplit(const std::filesystem::path& dir, const std::string& split);

}  // namespace hintforge
