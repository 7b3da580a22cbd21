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

#include <algorithm>
#include <numeric>

#include "hintforge/baselines.hpp"

namespace hintforge::baselines {

namespace {

std::vector<int> byDegree(const Graph& g, bool descending) {
  auto deg = g.degrees();
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return descending ? deg[a] > deg[b] : deg[a] < deg[b];
  });
  return order;
}

}  // namespace

Coloring greedyColoring(const Graph& g, const std::vector<int>& order) {
  auto adj = g.adjacency();
  std::vector<int> colors(g.n, -1);
  std::vector<int> seenAt(g.n + 1, -1);
  for (int v : order) {
    for (int u : adj[v])
      if (colors[u] >= 0) seenAt[colors[u]] = v;
    int c = 0;
    while (seenAt[c] == v) ++c;
    colors[v] = c;
  }
  return {colors};
}

std::vector<int> largestFirstOrder(const Graph& g) { return byDegree(g, true); }

std::vector<int> smallestLastOrder(const Graph& g) {
  auto adj = g.adjacency();
  auto deg = g.degrees();
  std::vector<bool> removed(g.n, false);
  std::vector<int> removal;
  removal.reserve(g.n);
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    removed[best] = true;
    removal.push_back(best);
    for (int u : adj[best])
      if (!removed[u]) --deg[u];
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

Coloring dsatur(const Graph& g) {
  auto adj = g.adjacency();
  auto deg = g.degrees();
  std::vector<int> colors(g.n, -1);
  std::vector<std::vector<bool>> neighborColors(g.n);
  std::vector<int> saturation(g.n, 0);
  for (int step = 0; step < g.n; ++step) {
    int v = -1;
    for (int u = 0; u < g.n; ++u) {
      if (colors[u] >= 0) continue;
      if (v < 0 || saturation[u] > saturation[v] ||
          (saturation[u] == saturation[v] && deg[u] > deg[v]))
        v = u;
    }
    int c = 0;
    while (c < static_cast<int>(neighborColors[v].size()) && neighborColors[v][c]) ++c;
    colors[v] = c;
    for (int u : adj[v]) {
      auto& nc = neighborColors[u];
      if (static_cast<int>(nc.size()) <= c) nc.resize(c + 1, false);
      if (!nc[c]) {
        nc[c] = true;
        ++saturation[u];
      }
    }
  }
  return {colors};
}

VertexSet minDegreeGreedy(const Graph& g) {
  auto adj = g.adjacency();
  auto deg = g.degrees();
  std::vector<bool> gone(g.n, false);
  std::vector<int> set;
  for (;;) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
    if (best < 0) break;
    set.push_back(best);
    std::vector<int> dropped = {best};
    gone[best] = true;
    for (int u : adj[best])
      if (!gone[u]) {
        gone[u] = true;
        dropped.push_back(u);
      }
    for (int x : dropped)
      for (int w : adj[x])
        if (!gone[w]) --deg[w];
  }
  std::sort(set.begin(), set.end());
  return {set};
}

namespace {

VertexSet greedyIndependentByOrder(const Graph& g, const std::vector<int>& order) {
  auto adj = g.adjacency();
  std::vector<bool> blocked(g.n, false);
  std::vector<int> set;
  for (int v : order) {
    if (blocked[v]) continue;
    set.push_back(v);
    blocked[v] = true;
    for (int u : adj[v]) blocked[u] = true;
  }
  std::sort(set.begin(), set.end());
  return {set};
}

}  // namespace

VertexSet randomGreedyIndependent(const Graph& g, CounterRng& rng) {
  return greedyIndependentByOrder(g, rng.permutation(g.n));
}

VertexSet ratioGreedyIndependent(const Graph& g) {
  auto adj = g.adjacency();
  auto deg = g.degrees();
  std::vector<double> score(g.n);
  for (int v = 0; v < g.n; ++v) {
    double around = 0;
    for (int u : adj[v]) around += deg[u];
    score[v] = deg[v] / (1.0 + around);
  }
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return score[a] < score[b]; });
  return greedyIndependentByOrder(g, order);
}

Output<VertexSet> independentLocalImprovement(const Graph& g, int maxSwaps) {
  auto adj = g.adjacency();
  std::vector<bool> in(g.n, false);
  for (int v : minDegreeGreedy(g).vertices) in[v] = true;
  std::vector<int> tight(g.n, 0);  // neighbors in the set
  for (int v = 0; v < g.n; ++v)
    if (in[v])
      for (int u : adj[v]) ++tight[u];
  auto insert = [&](int v) {
    in[v] = true;
    for (int u : adj[v]) ++tight[u];
  };
  auto erase = [&](int v) {
    in[v] = false;
    for (int u : adj[v]) --tight[u];
  };
  std::vector<bool> mark(g.n, false);
  Output<VertexSet> out;
  bool improved = true;
  while (improved && out.trace.repairIterations < maxSwaps) {
    improved = false;
    for (int x = 0; x < g.n && !improved; ++x) {
      if (!in[x]) continue;
      std::vector<int> cand;
      for (int u : adj[x])
        if (!in[u] && tight[u] == 1) cand.push_back(u);
      for (std::size_t a = 0; a < cand.size() && !improved; ++a) {
        for (int w : adj[cand[a]]) mark[w] = true;
        for (std::size_t b = a + 1; b < cand.size(); ++b) {
          if (mark[cand[b]]) continue;
          erase(x);
          insert(cand[a]);
          insert(cand[b]);
          improved = true;
          break;
        }
        for (int w : adj[cand[a]]) mark[w] = false;
      }
    }
    if (improved) ++out.trace.repairIterations;
  }
  for (int v = 0; v < g.n; ++v)
    if (in[v]) out.solution.vertices.push_back(v);
  return out;
}

VertexSet highDegreeGreedy(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<bool> dominated(g.n, false);
  std::vector<int> set;
  for (int v : byDegree(g, true)) {
    bool useful = !dominated[v];
    for (int u : adj[v]) useful = useful || !dominated[u];
    if (!useful) continue;
    set.push_back(v);
    dominated[v] = true;
    for (int u : adj[v]) dominated[u] = true;
  }
  std::sort(set.begin(), set.end());
  return {set};
}

namespace {

std::vector<int> marginalGainOrder(const Graph& g, const std::vector<std::vector<int>>& adj) {
  std::vector<bool> dominated(g.n, false);
  std::vector<int> gain(g.n);
  for (int v = 0; v < g.n; ++v) gain[v] = static_cast<int>(adj[v].size()) + 1;
  std::vector<int> picked;
  int remaining = g.n;
  auto cover = [&](int u) {
    if (dominated[u]) return;
    dominated[u] = true;
    --remaining;
    --gain[u];
    for (int w : adj[u]) --gain[w];
  };
  while (remaining > 0) {
    int best = 0;
    for (int v = 1; v < g.n; ++v)
      if (gain[v] > gain[best]) best = v;
    picked.push_back(best);
    cover(best);
    for (int u : adj[best]) cover(u);
  }
  return picked;
}

}  // namespace

VertexSet marginalGainGreedy(const Graph& g) {
  auto set = marginalGainOrder(g, g.adjacency());
  std::sort(set.begin(), set.end());
  return {set};
}

Output<VertexSet> redundancyAwareGreedy(const Graph& g) {
  auto adj = g.adjacency();
  auto picked = marginalGainOrder(g, adj);
  std::vector<int> count(g.n, 0);  // dominators of each vertex
  std::vector<bool> in(g.n, false);
  for (int v : picked) {
    in[v] = true;
    ++count[v];
    for (int u : adj[v]) ++count[u];
  }
  Output<VertexSet> out;
  // Latest picks are tried first.
  for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
    int v = *it;
    bool redundant = count[v] >= 2;
    for (int u : adj[v]) redundant = redundant && count[u] >= 2;
    if (!redundant) continue;
    in[v] = false;
    --count[v];
    for (int u : adj[v]) --count[u];
    ++out.trace.repairIterations;
  }
  for (int v = 0; v < g.n; ++v)
    if (in[v]) out.solution.vertices.push_back(v);
  return out;
}

}  // namespace hintforge::baselines
