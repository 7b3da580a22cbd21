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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hintforge/error.hpp"
#include "hintforge/serialize.hpp"

namespace hintforge::cli {

std::uint64_t defaultSeed() {
  const char* env = std::getenv("HINTFORGE_SEED");
  if (!env || !*env) return kDefaultSeed;
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(env, &used, 0);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kParse, std::string("HINTFORGE_SEED is not an integer: ") + env);
}

std::vector<FamilyInfo> parseTargets(const std::string& spec) {
  std::vector<FamilyInfo> out;
  if (spec == "all") {
    for (const auto& f : familyRegistry())
      if (f.benchmarkTarget) out.push_back(f);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto slash = item.find('/');
    require(slash != std::string::npos, ErrorCode::kParse,
            "target '" + item + "' is not <class>/<family>");
    out.push_back(findFamily(parseProblemClass(item.substr(0, slash)), item.substr(slash + 1)));
  }
  require(!out.empty(), ErrorCode::kInvalidArgument, "no targets given");
  return out;
}

void emitJson(const nlohmann::json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  writeJsonFile(path, j);
}

}  // namespace hintforge::cli

int main(int argc, char** argv) {
  CLI::App app{"hintforge: planted benchmark distributions, solver selection and evaluation"};
  app.require_subcommand(1);
  hintforge::cli::addDataCommands(app);
  hintforge::cli::addBenchCommands(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const hintforge::cli::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 3;
  } catch (const hintforge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
