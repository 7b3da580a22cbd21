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

// TSP families. Cities always lie on the boundary of their convex hull, so
// the boundary order is an optimal tour: any closed tour through the points
// is at least the hull perimeter, and the boundary order attains it.
#include <algorithm>
#include <cmath>
#include <string>

#include "families.hpp"
#include "hintforge/error.hpp"
#include "hintforge/verify.hpp"

namespace hintforge::gen {

namespace {

// `points` arrive in boundary order; labels are shuffled before returning.
Planted finishTsp(const std::vector<Point>& points, json hidden, CounterRng& rng) {
  const int n = static_cast<int>(points.size());
  auto perm = rng.permutation(n);  // perm[new] = old
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  TspInstance tsp;
  tsp.coords.resize(n);
  for (int i = 0; i < n; ++i) tsp.coords[i] = points[perm[i]];
  std::vector<int> order(n);
  for (int t = 0; t < n; ++t) order[t] = inv[t];
  Planted out;
  out.optimum = tourLength(tsp, order);
  out.data = std::move(tsp);
  out.solution = Tour{std::move(order)};
  out.hidden = std::move(hidden);
  return out;
}

// Sorted positions in [0, length) with every gap at least minGap.
std::vector<double> spreadPositions(CounterRng& rng, int count, double length,
                                    double minGap) {
  require(count * minGap < length, ErrorCode::kInvalidArgument,
          "tsp: too many cities for the minimum spacing");
  std::vector<double> pos(count);
  for (double& x : pos) x = rng.uniform(0, length - count * minGap);
  std::sort(pos.begin(), pos.end());
  for (int i = 0; i < count; ++i) pos[i] += i * minGap;
  return pos;
}

std::vector<Point> railPoints(const std::vector<double>& bottom,
                              const std::vector<double>& top, double height,
                              double dx, double dy) {
  std::vector<Point> pts;
  for (double x : bottom) pts.push_back({x + dx, dy});
  for (auto it = top.rbegin(); it != top.rend(); ++it) pts.push_back({*it + dx, height + dy});
  return pts;
}

}  // namespace

Planted clusteredEuclidean(const FamilyContext& ctx) {
  const int n = ctx.i("numCities"), nc = ctx.i("clusters");
  require(n >= 3 && nc >= 1 && nc <= n, ErrorCode::kInvalidArgument,
          "clustered-euclidean: needs at least three cities and one per cluster");
  // Arc centers are a family trait.
  auto frng = ctx.familyStream("arcs");
  const double slot = 2 * M_PI / nc;
  std::vector<double> centers(nc);
  for (int c = 0; c < nc; ++c) centers[c] = c * slot + frng.uniform(-0.1, 0.1) * slot;

  auto& rng = ctx.rng;
  const double halfArc = 0.5 * ctx.d("arcFraction") * slot;
  std::vector<double> angles;
  for (int c = 0; c < nc; ++c) {
    int count = n / nc + (c < n % nc ? 1 : 0);
    auto pos = spreadPositions(rng, count, 2 * halfArc, 0.2 * 2 * halfArc / count);
    for (double a : pos) angles.push_back(centers[c] - halfArc + a);
  }
  const double radius = rng.uniform(ctx.d("radiusMin"), ctx.d("radiusMax"));
  const double theta = rng.uniform(0, 2 * M_PI);
  const double dx = rng.uniform(-100, 100), dy = rng.uniform(-100, 100);
  std::vector<Point> pts;
  for (double a : angles)
    pts.push_back({dx + radius * std::cos(a + theta), dy + radius * std::sin(a + theta)});
  json hidden = {{"clusters", nc}, {"radius", radius}};
  return finishTsp(pts, std::move(hidden), rng);
}

Planted latentMetric(const FamilyContext& ctx) {
  const int n = ctx.i("numCities");
  require(n >= 4, ErrorCode::kInvalidArgument, "latent-metric: needs at least four cities");
  auto& rng = ctx.rng;
  const int regime = static_cast<int>(rng.below(3));
  const double scale = ctx.d("scale");
  const double dx = std::round(rng.uniform(-100, 100)), dy = std::round(rng.uniform(-100, 100));
  std::vector<Point> pts;
  static const char* names[] = {"ring", "rails", "rectangle"};
  if (regime == 0) {
    auto angles = spreadPositions(rng, n, 2 * M_PI, 0.2 * 2 * M_PI / n);
    for (double a : angles) pts.push_back({dx + scale * std::cos(a), dy + scale * std::sin(a)});
  } else if (regime == 1) {
    int lower = n / 2;
    auto bottom = spreadPositions(rng, lower, scale, 0.2 * scale / lower);
    auto top = spreadPositions(rng, n - lower, scale, 0.2 * scale / (n - lower));
    pts = railPoints(bottom, top, 0.4 * scale, dx, dy);
  } else {
    double w = scale, h = 0.6 * scale, perim = 2 * (w + h);
    auto s = spreadPositions(rng, n, perim, 0.2 * perim / n);
    for (double t : s) {
      Point q;
      if (t < w) q = {t, 0};
      else if (t < w + h) q = {w, t - w};
      else if (t < 2 * w + h) q = {w - (t - w - h), h};
      else q = {0, h - (t - 2 * w - h)};
      pts.push_back({q.x + dx, q.y + dy});
    }
  }
  json hidden = {{"regime", names[regime]}};
  return finishTsp(pts, std::move(hidden), rng);
}

Planted pairedRibbon(const FamilyContext& ctx) {
  const int n = ctx.i("numCities");
  require(n >= 4 && n % 2 == 0, ErrorCode::kInvalidArgument,
          "paired-ribbon: needs an even number of at least four cities");
  auto& rng = ctx.rng;
  const int perRail = n / 2;
  const double spacing = ctx.d("spacing"), height = ctx.d("height");
  std::vector<double> bottom(perRail), top(perRail);
  for (int i = 0; i < perRail; ++i) {
    bottom[i] = i * spacing + rng.uniform(-0.2, 0.2) * spacing;
    top[i] = (i + 0.5) * spacing + rng.uniform(-0.2, 0.2) * spacing;
  }
  const double dx = std::round(rng.uniform(-100, 100)), dy = std::round(rng.uniform(-100, 100));
  json hidden = {{"rails", 2}, {"height", height}};
  return finishTsp(railPoints(bottom, top, height, dx, dy), std::move(hidden), rng);
}

}  // namespace hintforge::gen
