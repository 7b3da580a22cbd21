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

#include "hintforge/serialize.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hintforge {

using nlohmann::json;

namespace {

json payloadToJson(const InstanceData& data) {
  return std::visit(
      [](const auto& d) -> json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Graph>) {
          json edges = json::array();
          for (auto [u, v] : d.edges) edges.push_back({u, v});
          return {{"n", d.n}, {"edges", std::move(edges)}};
        } else if constexpr (std::is_same_v<T, CnfFormula>) {
          return {{"numVars", d.numVars}, {"clauses", d.clauses}};
        } else if constexpr (std::is_same_v<T, TspInstance>) {
          json pts = json::array();
          for (const auto& p : d.coords) pts.push_back({p.x, p.y});
          return {{"coords", std::move(pts)}};
        } else {
          json usage = json::array();
          for (int i = 0; i < d.numItems; ++i) {
            json row = json::array();
            for (int r = 0; r < d.numResources; ++r) row.push_back(d.use(i, r));
            usage.push_back(std::move(row));
          }
          return {{"numItems", d.numItems},
                  {"numResources", d.numResources},
                  {"values", d.values},
                  {"usage", std::move(usage)},
                  {"capacities", d.capacities}};
        }
      },
      data);
}

PackingTable tableFromJson(const json& p) {
  PackingTable t;
  t.numItems = p.at("numItems").get<int>();
  t.numResources = p.at("numResources").get<int>();
  t.values = p.at("values").get<std::vector<double>>();
  t.capacities = p.at("capacities").get<std::vector<double>>();
  const auto& usage = p.at("usage");
  require(usage.size() == static_cast<std::size_t>(t.numItems), ErrorCode::kParse,
          "usage row count does not match numItems");
  t.usage.reserve(static_cast<std::size_t>(t.numItems) * t.numResources);
  for (const auto& row : usage) {
    require(row.size() == static_cast<std::size_t>(t.numResources), ErrorCode::kParse,
            "usage row width does not match numResources");
    for (const auto& x : row) t.usage.push_back(x.get<double>());
  }
  return t;
}

InstanceData payloadFromJson(ProblemClass c, const json& p) {
  switch (c) {
    case ProblemClass::kColoring:
    case ProblemClass::kMis:
    case ProblemClass::kMds: {
      Graph g;
      g.n = p.at("n").get<int>();
      for (const auto& e : p.at("edges")) {
        g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      }
      return g;
    }
    case ProblemClass::kMaxSat: {
      CnfFormula f;
      f.numVars = p.at("numVars").get<int>();
      f.clauses = p.at("clauses").get<std::vector<std::vector<int>>>();
      return f;
    }
    case ProblemClass::kPackingLp: return PackingLpInstance{tableFromJson(p)};
    case ProblemClass::kMdkp: return MdkpInstance{tableFromJson(p)};
    case ProblemClass::kTsp: {
      TspInstance t;
      for (const auto& pt : p.at("coords")) {
        t.coords.push_back({pt.at(0).get<double>(), pt.at(1).get<double>()});
      }
      return t;
    }
  }
  throw Error(ErrorCode::kParse, "unreachable problem class");
}

}  // namespace

json toJson(const Solution& sol) {
  json j = {{"kind", solutionKind(sol)}};
  std::visit(
      [&j](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Coloring>) j["colors"] = s.colors;
        else if constexpr (std::is_same_v<T, Assignment>) j["values"] = s.values;
        else if constexpr (std::is_same_v<T, VertexSet>) j["vertices"] = s.vertices;
        else if constexpr (std::is_same_v<T, ItemFractions>) j["fractions"] = s.fractions;
        else if constexpr (std::is_same_v<T, ItemPicks>) j["picks"] = s.picks;
        else j["order"] = s.order;
      },
      sol);
  return j;
}

Solution solutionFromJson(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "coloring") return Coloring{j.at("colors").get<std::vector<int>>()};
  if (kind == "assignment") return Assignment{j.at("values").get<std::vector<bool>>()};
  if (kind == "vertex-set") return VertexSet{j.at("vertices").get<std::vector<int>>()};
  if (kind == "item-fractions") {
    return ItemFractions{j.at("fractions").get<std::vector<double>>()};
  }
  if (kind == "item-picks") return ItemPicks{j.at("picks").get<std::vector<bool>>()};
  if (kind == "tour") return Tour{j.at("order").get<std::vector<int>>()};
  throw Error(ErrorCode::kParse, "unknown solution kind '" + kind + "'");
}

json toJson(const PublicInstance& inst) {
  return {{"id", inst.id},
          {"problemClass", toString(inst.problemClass)},
          {"public", payloadToJson(inst.data)}};
}

json toJson(const EvaluatorData& eval, ProblemClass) {
  json e = {{"familyId", eval.familyId},
            {"hiddenMetadata", eval.hiddenMetadata},
            {"optimumValue", eval.optimumValue},
            {"certified", eval.certified}};
  if (eval.optimumSolution) e["optimumSolution"] = toJson(*eval.optimumSolution);
  return e;
}

json toJson(const Instance& inst) {
  json j = toJson(inst.pub);
  j["evaluator"] = toJson(inst.eval, inst.problemClass());
  return j;
}

PublicInstance publicFromJson(const json& j) {
  try {
    PublicInstance p;
    p.id = j.at("id").get<std::string>();
    p.problemClass = parseProblemClass(j.at("problemClass").get<std::string>());
    p.data = payloadFromJson(p.problemClass, j.at("public"));
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Instance instanceFromJson(const json& j) {
  Instance inst;
  inst.pub = publicFromJson(j);
  try {
    const auto& e = j.at("evaluator");
    inst.eval.familyId = e.at("familyId").get<std::string>();
    inst.eval.hiddenMetadata = e.value("hiddenMetadata", json::object());
    inst.eval.optimumValue = e.at("optimumValue").get<double>();
    inst.eval.certified = e.value("certified", true);
    if (e.contains("optimumSolution")) {
      inst.eval.optimumSolution = solutionFromJson(e.at("optimumSolution"));
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kParse, ex.what());
  }
  return inst;
}

std::string canonicalDump(const json& j) { return j.dump(); }

json readJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIo, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

void writeJsonFile(const std::filesystem::path& path, const json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  require(out.good(), ErrorCode::kIo, "cannot write " + path.string());
  out << j.dump(1) << '\n';
}

void writeInstanceFile(const std::filesystem::path& path, const Instance& inst) {
  writeJsonFile(path, toJson(inst));
}

void writePublicFile(const std::filesystem::path& path, const PublicInstance& inst) {
  writeJsonFile(path, toJson(inst));
}

Instance readInstanceFile(const std::filesystem::path& path) {
  return instanceFromJson(readJsonFile(path));
}

PublicInstance readPublicFile(const std::filesystem::path& path) {
  return publicFromJson(readJsonFile(path));
}

void writeDimacs(std::ostream& os, const CnfFormula& f) {
  os << "p cnf " << f.numVars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) os << lit << ' ';
    os << "0\n";
  }
}

CnfFormula readDimacs(std::istream& is) {
  CnfFormula f;
  std::string line;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> f.numVars >> declared;
      require(fmt == "cnf" && !ls.fail(), ErrorCode::kParse, "bad DIMACS header");
      header = true;
      continue;
    }
    require(header, ErrorCode::kParse, "clause before DIMACS header");
    int lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  require(header, ErrorCode::kParse, "missing DIMACS header");
  if (!current.empty()) f.clauses.push_back(std::move(current));
  require(f.clauses.size() == declared, ErrorCode::kParse,
          "DIMACS clause count differs from header");
  f.validate();
  return f;
}

std::string toDimacs(const CnfFormula& f) {
  std::ostringstream os;
  writeDimacs(os, f);
  return os.str();
}

CnfFormula fromDimacs(const std::string& text) {
  std::istringstream is(text);
  return readDimacs(is);
}

}  // namespace hintforge
