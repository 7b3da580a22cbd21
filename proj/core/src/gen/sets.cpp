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

// MIS and MDS families.
//
// MIS: vertices are covered by disjoint cliques, each holding one planted
// vertex, and planted vertices are never adjacent. The cover bounds the
// independence number by its size and the planted set attains it.
//
// MDS: every vertex is adjacent to a cluster hub, and each cluster owns a
// private leaf adjacent only to its hub. Leaves have disjoint closed
// neighborhoods, so the hubs are a minimum dominating set.
#include <algorithm>
#include <cmath>
#include <string>

#include "families.hpp"
#include "hintforge/error.hpp"

namespace hintforge::gen {

namespace {

struct MisBuilder {
  EdgeSet edges;
  std::vector<bool> planted;
  std::vector<int> plantedList;
  int coverSize = 0;

  explicit MisBuilder(int n) : edges(n), planted(n, false) {}

  void clique(const std::vector<int>& vs, int plantedVertex) {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) edges.add(vs[a], vs[b]);
    mark(plantedVertex);
    ++coverSize;
  }
  void mark(int v) {
    if (v < 0) return;
    planted[v] = true;
    plantedList.push_back(v);
  }
  bool allowed(int u, int v) const { return u != v && !(planted[u] && planted[v]); }
  void link(int u, int v) {
    if (allowed(u, v)) edges.add(u, v);
  }
  // Even path or even cycle over vs, covered by consecutive pairs.
  void evenChain(const std::vector<int>& vs, bool cycle) {
    for (std::size_t t = 0; t + 1 < vs.size(); ++t) edges.add(vs[t], vs[t + 1]);
    if (cycle) edges.add(vs.back(), vs.front());
    for (std::size_t t = 0; t < vs.size(); t += 2) {
      mark(static_cast<int>(vs[t]));
      ++coverSize;
    }
  }
  // Random allowed edges between two vertex groups.
  void bridge(CounterRng& rng, const std::vector<int>& a, const std::vector<int>& b,
              int count) {
    for (int t = 0, tries = 0; t < count && tries < 50 * count; ++tries) {
      int u = a[rng.below(a.size())], v = b[rng.below(b.size())];
      if (!allowed(u, v) || edges.has(u, v)) continue;
      edges.add(u, v);
      ++t;
    }
  }

  Planted finish(json hidden, std::vector<std::string> keys, CounterRng& rng) {
    std::sort(plantedList.begin(), plantedList.end());
    hidden["planted"] = plantedList;
    keys.push_back("planted");
    return relabelPlantedGraph(ProblemClass::kMis, edges, VertexSet{plantedList},
                               coverSize, std::move(hidden), keys, rng);
  }
};

int pickOne(CounterRng& rng, const std::vector<int>& vs) {
  return vs[rng.below(vs.size())];
}

}  // namespace

Planted cliquePath(const FamilyContext& ctx) {
  const int comps = ctx.i("components"), cs = ctx.i("cliqueSize"), len = ctx.i("pathLength");
  require(comps >= 1 && cs >= 2 && len >= 2 && len % 2 == 0, ErrorCode::kInvalidArgument,
          "clique-path: needs cliques of size >= 2 and even paths");
  auto& rng = ctx.rng;
  const int n = comps * (cs + len);
  MisBuilder mb(n);
  std::vector<std::vector<int>> cliques, paths;
  for (int c = 0; c < comps; ++c) {
    int base = c * (cs + len);
    cliques.push_back(iotaVec(cs, base));
    paths.push_back(iotaVec(len, base + cs));
    mb.clique(cliques.back(), pickOne(rng, cliques.back()));
    mb.evenChain(paths.back(), false);
  }
  // Chain clique_c - path_c - clique_{c+1}, then sprinkle extra links.
  const int extra = ctx.i("extraLinks");
  for (int c = 0; c < comps; ++c) {
    mb.bridge(rng, cliques[c], {paths[c].front()}, 1);
    if (c + 1 < comps) mb.bridge(rng, {paths[c].back()}, cliques[c + 1], 1);
    mb.bridge(rng, cliques[c], paths[c], extra);
    if (c + 1 < comps) mb.bridge(rng, paths[c], cliques[c + 1], extra);
  }
  json hidden = {{"cliques", cliques}, {"paths", paths}};
  return mb.finish(std::move(hidden), {"cliques", "paths"}, rng);
}

Planted coreFringe(const FamilyContext& ctx) {
  const int nc = ctx.i("coreCliques"), cs = ctx.i("cliqueSize"), pairs = ctx.i("fringePairs");
  require(nc >= 1 && cs >= 2 && pairs >= 0, ErrorCode::kInvalidArgument,
          "core-fringe: needs at least one core clique of size >= 2");
  auto& rng = ctx.rng;
  const int coreN = nc * cs, n = coreN + 2 * pairs;
  MisBuilder mb(n);
  std::vector<std::vector<int>> cliques;
  std::vector<int> corePlanted, coreFree;
  for (int c = 0; c < nc; ++c) {
    cliques.push_back(iotaVec(cs, c * cs));
    int p = pickOne(rng, cliques.back());
    mb.clique(cliques.back(), p);
    corePlanted.push_back(p);
    for (int v : cliques.back())
      if (v != p) coreFree.push_back(v);
  }
  const double density = ctx.d("coreDensity");
  for (int u = 0; u < coreN; ++u)
    for (int v = u + 1; v < coreN; ++v)
      if (u / cs != v / cs && mb.allowed(u, v) && rng.bernoulli(density)) mb.edges.add(u, v);

  // Fringe pair (trap, keeper): the keeper is planted; the trap has degree two
  // and touches a planted core vertex, which lures min-degree greedy.
  std::vector<int> traps;
  const int links = ctx.i("keeperLinks");
  for (int t = 0; t < pairs; ++t) {
    int trap = coreN + 2 * t, keeper = trap + 1;
    mb.clique({trap, keeper}, keeper);
    mb.edges.add(trap, pickOne(rng, corePlanted));
    if (!coreFree.empty()) mb.bridge(rng, {keeper}, coreFree, links);
    traps.push_back(trap);
  }
  json hidden = {{"coreCliques", cliques}, {"traps", traps}};
  return mb.finish(std::move(hidden), {"coreCliques", "traps"}, rng);
}

Planted motifBridge(const FamilyContext& ctx) {
  const int n = ctx.i("numVertices");
  const int cliqueSize = ctx.i("cliqueSize"), cycleLength = ctx.i("cycleLength");
  const int bicliqueSide = ctx.i("bicliqueSide"), crownSide = ctx.i("crownSide");
  require(cycleLength % 2 == 0 && cycleLength >= 4 && crownSide >= 3 && bicliqueSide >= 1,
          ErrorCode::kInvalidArgument, "motif-bridge: invalid motif sizes");
  // Motif order is a family trait.
  std::vector<int> order = {0, 1, 2, 3};
  auto frng = ctx.familyStream("motifs");
  frng.shuffle(order);
  const int sizes[] = {cliqueSize, cycleLength, 2 * bicliqueSide, 2 * crownSide};
  const char* names[] = {"clique", "cycle", "biclique", "crown"};

  auto& rng = ctx.rng;
  MisBuilder mb(n);
  std::vector<std::vector<int>> motifs;
  json kinds = json::array();
  int next = 0;
  for (int t = 0;; ++t) {
    int kind = order[t % 4];
    if (sizes[kind] > n - next) break;
    auto vs = iotaVec(sizes[kind], next);
    next += sizes[kind];
    if (kind == 0) {
      mb.clique(vs, pickOne(rng, vs));
    } else if (kind == 1) {
      mb.evenChain(vs, true);
    } else {
      // Sides U = first half (planted), W = second half.
      int a = sizes[kind] / 2;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
          if (kind == 2 || i != j) mb.edges.add(vs[i], vs[a + j]);
      for (int i = 0; i < a; ++i) {
        mb.mark(vs[i]);
        ++mb.coverSize;  // cover pair (u_i, w_i) or (u_i, w_{i+1}) for crowns
      }
    }
    motifs.push_back(vs);
    kinds.push_back(names[kind]);
  }
  if (next < n) {
    auto vs = iotaVec(n - next, next);
    mb.clique(vs, pickOne(rng, vs));
    motifs.push_back(vs);
    kinds.push_back("clique");
  }
  const int links = ctx.i("bridgesPerLink");
  for (std::size_t t = 0; t + 1 < motifs.size(); ++t)
    mb.bridge(rng, motifs[t], motifs[t + 1], links);
  json hidden = {{"motifs", motifs}, {"motifKinds", kinds}};
  return mb.finish(std::move(hidden), {"motifs"}, rng);
}

namespace {

struct MdsBuilder {
  EdgeSet edges;
  std::vector<int> hubs;
  std::vector<int> leaves;
  std::vector<bool> isLeaf;

  explicit MdsBuilder(int n) : edges(n), isLeaf(n, false) {}

  void cluster(int hub, int leaf) {
    hubs.push_back(hub);
    leaves.push_back(leaf);
    isLeaf[leaf] = true;
    edges.add(hub, leaf);
  }
  // Any edge that keeps leaves private.
  void link(int u, int v) {
    if (u != v && !isLeaf[u] && !isLeaf[v]) edges.add(u, v);
  }
  Planted finish(json hidden, std::vector<std::string> keys, CounterRng& rng) {
    auto sortedHubs = hubs;
    std::sort(sortedHubs.begin(), sortedHubs.end());
    hidden["hubs"] = sortedHubs;
    hidden["leaves"] = leaves;
    keys.push_back("hubs");
    keys.push_back("leaves");
    return relabelPlantedGraph(ProblemClass::kMds, edges, VertexSet{sortedHubs},
                               static_cast<double>(hubs.size()), std::move(hidden), keys, rng);
  }
};

}  // namespace

Planted gatewayHub(const FamilyContext& ctx) {
  const int nc = ctx.i("clusters"), s = ctx.i("clusterSize");
  require(nc >= 1 && s >= 4, ErrorCode::kInvalidArgument,
          "gateway-hub: clusters need at least four vertices");
  auto& rng = ctx.rng;
  MdsBuilder mb(nc * s);
  // Cluster layout: hub, leaf, two gateways, members.
  auto body = [&](int c) {
    std::vector<int> out;
    for (int p = 2; p < s; ++p) out.push_back(c * s + p);
    return out;
  };
  const double coverage = ctx.d("gatewayCoverage"), density = ctx.d("memberDensity");
  for (int c = 0; c < nc; ++c) {
    int hub = c * s;
    mb.cluster(hub, hub + 1);
    for (int v : body(c)) mb.link(hub, v);
  }
  for (int c = 0; c < nc; ++c) {
    auto own = body(c);
    auto nextBody = body((c + 1) % nc);
    for (int g = 0; g < 2; ++g) {
      int gw = c * s + 2 + g;
      for (int v : own)
        if (rng.bernoulli(coverage)) mb.link(gw, v);
      if (nc > 1)
        for (int v : nextBody)
          if (rng.bernoulli(coverage)) mb.link(gw, v);
    }
    for (std::size_t a = 2; a < own.size(); ++a)
      for (std::size_t b = a + 1; b < own.size(); ++b)
        if (rng.bernoulli(density)) mb.link(own[a], own[b]);
  }
  json gateways = json::array();
  for (int c = 0; c < nc; ++c) gateways.push_back({c * s + 2, c * s + 3});
  json hidden = {{"gateways", gateways}};
  return mb.finish(std::move(hidden), {"gateways"}, rng);
}

Planted geometricAnchor(const FamilyContext& ctx) {
  const int n = ctx.i("numVertices"), nc = ctx.i("clusters"), minSize = ctx.i("minClusterSize");
  require(nc >= 1 && minSize >= 2 && nc * minSize <= n, ErrorCode::kInvalidArgument,
          "geometric-anchor: cluster sizes do not fit the vertex count");
  auto& rng = ctx.rng;
  // Heterogeneous sizes: minSize each plus a random split of the remainder.
  std::vector<int> sizes(nc, minSize);
  for (int r = n - nc * minSize; r > 0; --r) ++sizes[rng.below(nc)];

  const double radius = ctx.d("clusterRadius"), reach = ctx.d("linkRadius");
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(nc))));
  std::vector<Point> pos(n);
  std::vector<int> clusterOf(n);
  MdsBuilder mb(n);
  json clusters = json::array();
  int next = 0;
  for (int c = 0; c < nc; ++c) {
    Point center{(c % side) * ctx.d("spacing") + rng.uniform(-1, 1),
                 (c / side) * ctx.d("spacing") + rng.uniform(-1, 1)};
    auto vs = iotaVec(sizes[c], next);
    next += sizes[c];
    for (int v : vs) {
      double r = radius * std::sqrt(rng.uniform()), a = 2 * M_PI * rng.uniform();
      pos[v] = {center.x + r * std::cos(a), center.y + r * std::sin(a)};
      clusterOf[v] = c;
    }
    pos[vs[0]] = center;
    mb.cluster(vs[0], vs[1]);
    for (int v : vs) mb.link(vs[0], v);
    clusters.push_back(vs);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double dx = pos[u].x - pos[v].x, dy = pos[u].y - pos[v].y;
      if (dx * dx + dy * dy <= reach * reach) mb.link(u, v);
    }
  json hidden = {{"clusters", clusters}, {"clusterSizes", sizes}};
  return mb.finish(std::move(hidden), {"clusters"}, rng);
}

Planted starKernel(const FamilyContext& ctx) {
  const int nc = ctx.i("clusters"), s = ctx.i("clusterSize");
  require(nc >= 1 && s >= 3, ErrorCode::kInvalidArgument,
          "star-kernel: clusters need at least three vertices");
  auto& rng = ctx.rng;
  MdsBuilder mb(nc * s);
  const int covered = std::min(
      s - 1, static_cast<int>(std::ceil(ctx.d("hubCoverage") * (s - 1))));
  for (int c = 0; c < nc; ++c) mb.cluster(c * s, c * s + 1);
  for (int c = 0; c < nc; ++c) {
    int hub = c * s;
    // Members are positions 2..s-1; the hub reaches `covered - 1` of them,
    // the rest hang off the next cluster's hub.
    std::vector<int> members = iotaVec(s - 2, hub + 2);
    rng.shuffle(members);
    for (std::size_t t = 0; t < members.size(); ++t) {
      bool own = static_cast<int>(t) < covered - 1 || nc == 1;
      mb.link(own ? hub : ((c + 1) % nc) * s, members[t]);
    }
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (rng.bernoulli(ctx.d("memberDensity"))) mb.link(members[a], members[b]);
    for (int d = c + 1; d < nc; ++d)
      if (rng.bernoulli(ctx.d("hubLinkDensity"))) mb.link(hub, d * s);
  }
  json clusters = json::array();
  for (int c = 0; c < nc; ++c) clusters.push_back(iotaVec(s, c * s));
  json hidden = {{"clusters", clusters}};
  return mb.finish(std::move(hidden), {"clusters"}, rng);
}

}  // namespace hintforge::gen
