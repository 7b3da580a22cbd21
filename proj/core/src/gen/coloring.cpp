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

// Coloring families. Each plants a K-coloring together with a K-clique, so
// the chromatic number is exactly K.
#include <string>

#include "families.hpp"
#include "hintforge/error.hpp"

namespace hintforge::gen {

namespace {

Planted finishColoring(const EdgeSet& edges, std::vector<int> colors, int k,
                       json hidden, CounterRng& rng) {
  return relabelPlantedGraph(ProblemClass::kColoring, edges, Coloring{std::move(colors)},
                             k, std::move(hidden), {"clique", "blocks"}, rng);
}

json blockLists(int blocks, int size) {
  json out = json::array();
  for (int b = 0; b < blocks; ++b) out.push_back(iotaVec(size, b * size));
  return out;
}

}  // namespace

Planted ringTemplate(const FamilyContext& ctx) {
  const int blocks = ctx.i("blocks"), s = ctx.i("blockSize"), k = ctx.i("colors");
  require(s >= k && blocks >= 1, ErrorCode::kInvalidArgument,
          "ring-template: blockSize must be at least colors");
  // The template is shared by the whole family.
  auto frng = ctx.familyStream("template");
  std::vector<std::pair<int, int>> tmpl;
  for (int p = 0; p < s; ++p)
    for (int q = p + 1; q < s; ++q) {
      bool clique = q < k;
      if (p % k == q % k) continue;
      if (clique || frng.bernoulli(ctx.d("templateDensity"))) tmpl.push_back({p, q});
    }

  auto& rng = ctx.rng;
  EdgeSet edges(blocks * s);
  std::vector<int> colors(blocks * s);
  for (int b = 0; b < blocks; ++b) {
    for (int p = 0; p < s; ++p) colors[b * s + p] = p % k;
    for (auto [p, q] : tmpl) {
      bool keep = (b == 0 && q < k) || !rng.bernoulli(ctx.d("dropRate"));
      if (keep) edges.add(b * s + p, b * s + q);
    }
  }
  for (int b = 0; blocks > 1 && b < blocks; ++b) {
    int c = (b + 1) % blocks;
    for (int p = 0; p < s; ++p)
      for (int q = 0; q < s; ++q)
        if (p % k != q % k && rng.bernoulli(ctx.d("bridgeDensity")))
          edges.add(b * s + p, c * s + q);
  }
  json hidden = {{"colors", k},
                 {"templateEdges", tmpl.size()},
                 {"clique", iotaVec(k)},
                 {"blocks", blockLists(blocks, s)}};
  return finishColoring(edges, std::move(colors), k, std::move(hidden), rng);
}

Planted overlappingPalette(const FamilyContext& ctx) {
  const int blocks = ctx.i("blocks"), s = ctx.i("blockSize"), k = ctx.i("colors");
  const int width = ctx.i("paletteWidth"), shift = ctx.i("paletteShift");
  require(blocks >= 2 && width <= s && width <= k, ErrorCode::kInvalidArgument,
          "overlapping-palette: inconsistent palette parameters");
  const int offset = static_cast<int>(ctx.familyStream("palette").below(k));
  auto colorOf = [&](int b, int p) { return (b * shift + p % width + offset) % k; };

  // The clique takes every color of block 0's palette plus the colors that
  // block 1 adds; together they must cover all k colors.
  std::vector<int> clique;
  std::vector<bool> used(k, false);
  for (int p = 0; p < width; ++p) {
    clique.push_back(p);
    used[colorOf(0, p)] = true;
  }
  for (int p = 0; p < width; ++p) {
    int c = colorOf(1, p);
    if (!used[c]) {
      used[c] = true;
      clique.push_back(s + p);
    }
  }
  require(static_cast<int>(clique.size()) == k, ErrorCode::kInvalidArgument,
          "overlapping-palette: first two palettes must cover every color");

  auto& rng = ctx.rng;
  const int n = blocks * s;
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = colorOf(v / s, v % s);
  EdgeSet edges(n);
  for (std::size_t a = 0; a < clique.size(); ++a)
    for (std::size_t b = a + 1; b < clique.size(); ++b) edges.add(clique[a], clique[b]);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (colors[u] == colors[v]) continue;
      int bu = u / s, bv = v / s;
      bool adjacent = bv == bu + 1 || (bu == 0 && bv == blocks - 1 && blocks > 2);
      double p = bu == bv ? ctx.d("intraDensity") : adjacent ? ctx.d("crossDensity") : 0.0;
      if (p > 0 && rng.bernoulli(p)) edges.add(u, v);
    }
  json hidden = {{"colors", k},
                 {"paletteOffset", offset},
                 {"paletteWidth", width},
                 {"paletteShift", shift},
                 {"clique", clique},
                 {"blocks", blockLists(blocks, s)}};
  return finishColoring(edges, std::move(colors), k, std::move(hidden), rng);
}

Planted separatorTrap(const FamilyContext& ctx) {
  const int blocks = ctx.i("blocks"), s = ctx.i("blockSize"), k = ctx.i("colors");
  require(blocks >= 2 && s >= k, ErrorCode::kInvalidArgument,
          "separator-trap: needs two blocks of at least `colors` vertices");
  auto frng = ctx.familyStream("separators");
  std::vector<int> sepColor(blocks);
  for (int& c : sepColor) c = static_cast<int>(frng.below(k));

  auto& rng = ctx.rng;
  const int n = blocks * (s + 1);
  std::vector<int> colors(n);
  EdgeSet edges(n);
  for (int b = 0; b < blocks; ++b) {
    for (int p = 0; p < s; ++p) colors[b * s + p] = p % k;
    for (int p = 0; p < s; ++p)
      for (int q = p + 1; q < s; ++q) {
        if (p % k == q % k) continue;
        if ((b == 0 && q < k) || rng.bernoulli(ctx.d("intraDensity")))
          edges.add(b * s + p, b * s + q);
      }
  }
  for (int b = 0; b < blocks; ++b) {
    int sep = blocks * s + b;
    colors[sep] = sepColor[b];
    const int targets[] = {b, (b + 1) % blocks, (b + blocks / 2) % blocks};
    for (int t = 0; t < 3; ++t) {
      double p = t == 0 ? ctx.d("ownDensity") : ctx.d("separatorDensity");
      for (int q = 0; q < s; ++q) {
        int v = targets[t] * s + q;
        if (colors[v] != sepColor[b] && rng.bernoulli(p)) edges.add(sep, v);
      }
    }
  }
  json hidden = {{"colors", k},
                 {"separatorColors", sepColor},
                 {"separators", iotaVec(blocks, blocks * s)},
                 {"clique", iotaVec(k)},
                 {"blocks", blockLists(blocks, s)}};
  return relabelPlantedGraph(ProblemClass::kColoring, edges, Coloring{std::move(colors)},
                             k, std::move(hidden), {"clique", "blocks", "separators"}, rng);
}

}  // namespace hintforge::gen
