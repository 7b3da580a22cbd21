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

// Bitset branch-and-bound oracles for the graph classes (n <= 64).

#include <algorithm>
#include <bit>
#include <numeric>

#include "hintforge/oracles.hpp"

namespace hintforge {

namespace {

using Mask = std::uint64_t;

int popcount(Mask m) { return std::popcount(m); }
int lowest(Mask m) { return std::countr_zero(m); }
Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> neighborMasks(const Graph& g, const char* what) {
  require(g.n <= 64, ErrorCode::kBudgetExceeded,
          std::string(what) + " oracle supports at most 64 vertices");
  std::vector<Mask> nb(static_cast<std::size_t>(g.n), 0);
  for (auto [u, v] : g.edges) {
    nb[u] |= bit(v);
    nb[v] |= bit(u);
  }
  return nb;
}

Mask fullMask(int n) { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

// ---- maximum clique -------------------------------------------------------

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Mask>& nb, BudgetMeter& meter) : nb_(nb), meter_(meter) {}

  std::vector<int> run(Mask candidates) {
    current_.clear();
    best_.clear();
    expand(candidates);
    return best_;
  }

 private:
  // Greedy coloring of the candidate set bounds the clique size reachable.
  void expand(Mask cand) {
    meter_.tick();
    if (cand == 0) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    std::vector<int> order;
    std::vector<int> bounds;
    Mask uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      Mask avail = uncolored;
      while (avail) {
        int v = lowest(avail);
        avail &= ~bit(v) & ~nb_[v];
        uncolored &= ~bit(v);
        order.push_back(v);
        bounds.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current_.size() + static_cast<std::size_t>(bounds[i]) <= best_.size()) return;
      const int v = order[i];
      current_.push_back(v);
      expand(cand & nb_[v]);
      current_.pop_back();
      cand &= ~bit(v);
    }
  }

  const std::vector<Mask>& nb_;
  BudgetMeter& meter_;
  std::vector<int> current_;
  std::vector<int> best_;
};

// ---- exact coloring ---------------------------------------------------------

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const std::vector<Mask>& nb, BudgetMeter& meter)
      : n_(g.n), nb_(nb), meter_(meter), colors_(static_cast<std::size_t>(g.n), -1) {}

  void seed(std::vector<int> coloring, int k) {
    best_ = std::move(coloring);
    bestK_ = k;
  }

  void run(int lowerBound, const std::vector<int>& clique) {
    lowerBound_ = lowerBound;
    // Pre-color the clique with distinct colors; breaks color symmetry.
    int k = 0;
    for (int v : clique) assign(v, k++);
    search(k, static_cast<int>(clique.size()));
  }

  const std::vector<int>& best() const { return best_; }
  int bestK() const { return bestK_; }

 private:
  void assign(int v, int c) {
    colors_[v] = c;
    classes_.resize(std::max<std::size_t>(classes_.size(), static_cast<std::size_t>(c) + 1), 0);
    classes_[c] |= bit(v);
  }
  void unassign(int v) {
    classes_[colors_[v]] &= ~bit(v);
    colors_[v] = -1;
  }

  void search(int used, int colored) {
    meter_.tick();
    if (bestK_ <= lowerBound_) return;
    if (colored == n_) {
      if (used < bestK_) {
        bestK_ = used;
        best_ = colors_;
      }
      return;
    }
    // DSATUR choice: max saturation, then max uncolored degree, then index.
    int pick = -1;
    int pickSat = -1;
    int pickDeg = -1;
    Mask uncolored = 0;
    for (int v = 0; v < n_; ++v) {
      if (colors_[v] < 0) uncolored |= bit(v);
    }
    for (int v = 0; v < n_; ++v) {
      if (colors_[v] >= 0) continue;
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += (classes_[c] & nb_[v]) ? 1 : 0;
      const int deg = popcount(nb_[v] & uncolored);
      if (sat > pickSat || (sat == pickSat && deg > pickDeg)) {
        pick = v;
        pickSat = sat;
        pickDeg = deg;
      }
    }
    for (int c = 0; c < used; ++c) {
      if (classes_[c] & nb_[pick]) continue;
      assign(pick, c);
      search(used, colored + 1);
      unassign(pick);
      if (bestK_ <= lowerBound_) return;
    }
    if (used + 1 < bestK_) {
      assign(pick, used);
      search(used + 1, colored + 1);
      unassign(pick);
    }
  }

  int n_;
  const std::vector<Mask>& nb_;
  BudgetMeter& meter_;
  std::vector<int> colors_;
  std::vector<Mask> classes_;
  std::vector<int> best_;
  int bestK_ = 0;
  int lowerBound_ = 0;
};

std::vector<int> dsaturGreedy(const Graph& g, const std::vector<Mask>& nb) {
  std::vector<int> colors(static_cast<std::size_t>(g.n), -1);
  std::vector<Mask> classes;
  for (int step = 0; step < g.n; ++step) {
    int pick = -1, pickSat = -1, pickDeg = -1;
    for (int v = 0; v < g.n; ++v) {
      if (colors[v] >= 0) continue;
      int sat = 0;
      for (Mask cls : classes) sat += (cls & nb[v]) ? 1 : 0;
      const int deg = popcount(nb[v]);
      if (sat > pickSat || (sat == pickSat && deg > pickDeg)) {
        pick = v;
        pickSat = sat;
        pickDeg = deg;
      }
    }
    int c = 0;
    while (c < static_cast<int>(classes.size()) && (classes[c] & nb[pick])) ++c;
    if (c == static_cast<int>(classes.size())) classes.push_back(0);
    classes[c] |= bit(pick);
    colors[pick] = c;
  }
  return colors;
}

// ---- maximum independent set -------------------------------------------------

class MisSearch {
 public:
  MisSearch(const std::vector<Mask>& nb, BudgetMeter& meter) : nb_(nb), meter_(meter) {}

  Mask run(Mask all) {
    best_ = 0;
    bestSize_ = 0;
    search(all, 0);
    return best_;
  }

 private:
  // Greedy clique cover of p: every independent set takes <= 1 per clique.
  int cliqueCoverBound(Mask p) const {
    int cliques = 0;
    while (p) {
      int v = lowest(p);
      Mask clique = bit(v);
      Mask cand = p & nb_[v];
      while (cand) {
        int u = lowest(cand);
        clique |= bit(u);
        cand &= nb_[u];
      }
      p &= ~clique;
      ++cliques;
    }
    return cliques;
  }

  void search(Mask p, Mask chosen) {
    meter_.tick();
    // Vertices of degree <= 1 in p belong to some maximum independent set.
    bool reduced = true;
    while (reduced && p) {
      reduced = false;
      for (Mask scan = p; scan;) {
        int v = lowest(scan);
        scan &= scan - 1;
        if (!(p & bit(v))) continue;
        if (popcount(nb_[v] & p) <= 1) {
          chosen |= bit(v);
          p &= ~(bit(v) | nb_[v]);
          reduced = true;
        }
      }
    }
    const int size = popcount(chosen);
    if (p == 0) {
      if (size > bestSize_) {
        bestSize_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + cliqueCoverBound(p) <= bestSize_) return;
    int pick = -1;
    int pickDeg = -1;
    for (Mask scan = p; scan; scan &= scan - 1) {
      int v = lowest(scan);
      int d = popcount(nb_[v] & p);
      if (d > pickDeg) {
        pick = v;
        pickDeg = d;
      }
    }
    search(p & ~(bit(pick) | nb_[pick]), chosen | bit(pick));
    search(p & ~bit(pick), chosen);
  }

  const std::vector<Mask>& nb_;
  BudgetMeter& meter_;
  Mask best_ = 0;
  int bestSize_ = 0;
};

// ---- minimum dominating set --------------------------------------------------

class MdsSearch {
 public:
  MdsSearch(const std::vector<Mask>& closed, int n, BudgetMeter& meter)
      : closed_(closed), n_(n), meter_(meter) {}

  Mask run(Mask initialBest) {
    best_ = initialBest;
    bestSize_ = popcount(initialBest);
    search(0, 0, fullMask(n_));
    return best_;
  }

 private:
  void search(Mask chosen, Mask dominated, Mask allowed) {
    meter_.tick();
    const Mask all = fullMask(n_);
    const int size = popcount(chosen);
    if (dominated == all) {
      if (size < bestSize_) {
        bestSize_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + 1 >= bestSize_) return;
    const Mask undominated = all & ~dominated;
    const int remaining = popcount(undominated);
    int maxCover = 0;
    for (Mask scan = allowed; scan; scan &= scan - 1) {
      maxCover = std::max(maxCover, popcount(closed_[lowest(scan)] & undominated));
    }
    if (maxCover == 0) return;
    if (size + (remaining + maxCover - 1) / maxCover >= bestSize_) return;
    // Branch on the undominated vertex with the fewest eligible dominators.
    int target = -1;
    int fewest = n_ + 1;
    for (Mask scan = undominated; scan; scan &= scan - 1) {
      int u = lowest(scan);
      int options = popcount(closed_[u] & allowed);
      if (options < fewest) {
        fewest = options;
        target = u;
      }
    }
    if (fewest == 0) return;
    std::vector<std::pair<int, int>> options;
    for (Mask scan = closed_[target] & allowed; scan; scan &= scan - 1) {
      int w = lowest(scan);
      options.emplace_back(-popcount(closed_[w] & undominated), w);
    }
    std::sort(options.begin(), options.end());
    for (auto [negGain, w] : options) {
      search(chosen | bit(w), dominated | closed_[w], allowed);
      allowed &= ~bit(w);
      if (size + 1 >= bestSize_) return;
    }
  }

  const std::vector<Mask>& closed_;
  int n_;
  BudgetMeter& meter_;
  Mask best_ = 0;
  int bestSize_ = 0;
};

std::vector<int> maskToVector(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

}  // namespace

std::vector<int> maximumClique(const Graph& g, const OracleBudget& budget) {
  auto nb = neighborMasks(g, "clique");
  BudgetMeter meter(budget, "maximum clique");
  CliqueSearch search(nb, meter);
  auto clique = search.run(fullMask(g.n));
  std::sort(clique.begin(), clique.end());
  return clique;
}

ColoringOptimum exactColoring(const Graph& g, const OracleBudget& budget) {
  if (g.n == 0) return {0, Coloring{}};
  auto nb = neighborMasks(g, "coloring");
  BudgetMeter meter(budget, "exact coloring");
  CliqueSearch cliqueSearch(nb, meter);
  std::vector<int> clique = cliqueSearch.run(fullMask(g.n));
  std::vector<int> greedy = dsaturGreedy(g, nb);
  const int greedyK = *std::max_element(greedy.begin(), greedy.end()) + 1;
  const int lower = static_cast<int>(clique.size());
  if (greedyK == lower) return {greedyK, Coloring{std::move(greedy)}};
  ColoringSearch search(g, nb, meter);
  search.seed(greedy, greedyK);
  search.run(lower, clique);
  return {search.bestK(), Coloring{search.best()}};
}

SetOptimum exactMis(const Graph& g, const OracleBudget& budget) {
  auto nb = neighborMasks(g, "independent set");
  BudgetMeter meter(budget, "exact independent set");
  MisSearch search(nb, meter);
  Mask best = search.run(fullMask(g.n));
  auto set = maskToVector(best);
  return {static_cast<int>(set.size()), VertexSet{std::move(set)}};
}

SetOptimum exactMds(const Graph& g, const OracleBudget& budget) {
  auto nb = neighborMasks(g, "dominating set");
  std::vector<Mask> closed(nb.size());
  for (int v = 0; v < g.n; ++v) closed[v] = nb[v] | bit(v);
  // Marginal-gain greedy as the incumbent.
  Mask dominated = 0, chosen = 0;
  const Mask all = fullMask(g.n);
  while (dominated != all) {
    int pick = 0, gain = -1;
    for (int v = 0; v < g.n; ++v) {
      int c = popcount(closed[v] & ~dominated);
      if (c > gain) {
        gain = c;
        pick = v;
      }
    }
    chosen |= bit(pick);
    dominated |= closed[pick];
  }
  BudgetMeter meter(budget, "exact dominating set");
  MdsSearch search(closed, g.n, meter);
  Mask best = search.run(chosen);
  auto set = maskToVector(best);
  return {static_cast<int>(set.size()), VertexSet{std::move(set)}};
}

}  // namespace hintforge
