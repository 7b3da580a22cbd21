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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hintforge/error.hpp"

namespace hintforge {

/// Finite family of [0, 1] scores over instances of type X.
template <class X>
struct ScoreFamily {
  std::vector<std::string> hypotheses;
  std::function<double(std::size_t hypothesis, const X& x)> score;
};

struct RecoveryResult {
  std::size_t chosen = 0;
  std::string chosenId;
  std::vector<double> empiricalMeans;
  /// Top mean minus runner-up; zero with one hypothesis.
  double marginObserved = 0;
  /// Scores that fell outside [0, 1] and were clamped.
  std::size_t clampedScores = 0;
};

/// Pairwise (cascade) summation in index order.
inline double pairwiseSum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0;
    for (double x : xs) s += x;
    return s;
  }
  auto half = xs.size() / 2;
  return pairwiseSum(xs.first(half)) + pairwiseSum(xs.subspan(half));
}

/// Empirical-mean maximizer over the family; ties go to the smaller index.
template <class X>
RecoveryResult recoverHint(const ScoreFamily<X>& family, std::span<const X> sample) {
  require(!family.hypotheses.empty(), ErrorCode::kInvalidArgument,
          "recoverHint: empty hypothesis family");
  require(!sample.empty(), ErrorCode::kInvalidArgument, "recoverHint: empty sample");
  RecoveryResult out;
  const std::size_t n = family.hypotheses.size();
  out.empiricalMeans.resize(n);
  std::vector<double> scores(sample.size());
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t i = 0; i < sample.size(); ++i) {
      double s = family.score(h, sample[i]);
      if (!(s >= 0.0 && s <= 1.0)) {
        ++out.clampedScores;
        s = std::isnan(s) ? 0.0 : std::clamp(s, 0.0, 1.0);
      }
      scores[i] = s;
    }
    out.empiricalMeans[h] = pairwiseSum(scores) / static_cast<double>(sample.size());
  }
  for (std::size_t h = 1; h < n; ++h)
    if (out.empiricalMeans[h] > out.empiricalMeans[out.chosen]) out.chosen = h;
  out.chosenId = family.hypotheses[out.chosen];
  double runnerUp = -1;
  for (std::size_t h = 0; h < n; ++h)
    if (h != out.chosen) runnerUp = std::max(runnerUp, out.empiricalMeans[h]);
  out.marginObserved = runnerUp < 0 ? 0.0 : out.empiricalMeans[out.chosen] - runnerUp;
  return out;
}

/// ceil((2 / gamma^2) ln(2N / delta)).
inline int sufficientSamples(double gamma, int numHypotheses, double delta) {
  require(gamma > 0, ErrorCode::kInvalidArgument, "sufficientSamples: gamma must be positive");
  require(numHypotheses >= 1, ErrorCode::kInvalidArgument,
          "sufficientSamples: need at least one hypothesis");
  require(delta > 0 && delta < 1, ErrorCode::kInvalidArgument,
          "sufficientSamples: delta must lie in (0, 1)");
  return static_cast<int>(
      std::ceil(2.0 / (gamma * gamma) * std::log(2.0 * numHypotheses / delta)));
}

}  // namespace hintforge
