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

#include "hintforge/dataset.hpp"

#include "hintforge/error.hpp"
#include "hintforge/serialize.hpp"

namespace hintforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* const kSplits[] = {"train", "val", "test"};

}  // namespace

std::string DatasetManifest::targetName() const {
  return std::string(toString(spec.problemClass)) + "/" + spec.familyName;
}

void writeDataset(const fs::path& dir, const TargetDataset& ds) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  require(!ec, ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  json ids = json::object();
  const std::vector<Instance>* parts[] = {&ds.train, &ds.val, &ds.test};
  for (int s = 0; s < 3; ++s) {
    fs::path sub = dir / kSplits[s];
    fs::create_directories(sub, ec);
    require(!ec, ErrorCode::kIo, "cannot create " + sub.string() + ": " + ec.message());
    json list = json::array();
    for (const auto& inst : *parts[s]) {
      writeInstanceFile(sub / (inst.id() + ".json"), inst);
      list.push_back(inst.id());
    }
    ids[kSplits[s]] = list;
  }
  json manifest = {{"target", ds.targetName()},
                   {"problemClass", toString(ds.spec.problemClass)},
                   {"family", ds.spec.familyName},
                   {"profile", toString(ds.spec.profile)},
                   {"seed", ds.spec.seed},
                   {"familyParams", ds.spec.familyParams},
                   {"effectiveParams", ds.effectiveParams},
                   {"specHash", ds.specHash},
                   {"split", {{"train", ds.split.nTrain}, {"val", ds.split.nVal},
                              {"test", ds.split.nTest}}},
                   {"ids", ids}};
  writeJsonFile(dir / "manifest.json", manifest);
}

DatasetManifest readManifest(const fs::path& dir) {
  const fs::path path = dir / "manifest.json";
  require(fs::exists(path), ErrorCode::kNotFound, "missing dataset manifest " + path.string());
  json j = readJsonFile(path);
  try {
    DatasetManifest m;
    m.spec.problemClass = parseProblemClass(j.at("problemClass").get<std::string>());
    m.spec.familyName = j.at("family").get<std::string>();
    m.spec.profile = parseSizeProfile(j.at("profile").get<std::string>());
    m.spec.seed = j.at("seed").get<std::uint64_t>();
    m.spec.familyParams = j.value("familyParams", json::object());
    m.effectiveParams = j.value("effectiveParams", json::object());
    m.specHash = j.value("specHash", "");
    const auto& sp = j.at("split");
    m.split = {sp.at("train").get<int>(), sp.at("val").get<int>(), sp.at("test").get<int>()};
    for (const char* s : kSplits) m.ids[s] = j.at("ids").at(s).get<std::vector<std::string>>();
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "manifest " + path.string() + ": " + e.what());
  }
}

std::vector<Instance> loadSplit(const fs::path& dir, const std::string& split) {
  require(split == "train" || split == "val" || split == "test", ErrorCode::kInvalidArgument,
          "unknown split '" + split + "'");
  DatasetManifest m = readManifest(dir);
  std::vector<Instance> out;
  for (const auto& id : m.ids.at(split)) {
    fs::path p = dir / split / (id + ".json");
    require(fs::exists(p), ErrorCode::kNotFound, "missing dataset file " + p.string());
    out.push_back(readInstanceFile(p));
    require(out.back().id() == id, ErrorCode::kParse,
            "file " + p.string() + " holds instance " + out.back().id());
  }
  return out;
}

}  // namespace hintforge
