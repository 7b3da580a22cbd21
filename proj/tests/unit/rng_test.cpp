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
#include <set>

#include <gtest/gtest.h>

#include "hintforge/rng.hpp"

namespace hintforge {
namespace {

TEST(CounterRng, SameKeySameStream) {
  CounterRng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(CounterRng, DeriveSeparatesTags) {
  auto a = CounterRng::derive(7, "train", 0);
  auto b = CounterRng::derive(7, "train", 1);
  auto c = CounterRng::derive(7, "val", 0);
  auto d = CounterRng::derive(7, "train", 0);
  std::uint64_t x = a.next();
  EXPECT_NE(x, b.next());
  EXPECT_NE(x, c.next());
  EXPECT_EQ(x, d.next());
}

TEST(CounterRng, BelowStaysInRangeAndCoversIt) {
  CounterRng r(3);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 7000; ++i) {
    auto v = r.below(7);
    ASSERT_LT(v, 7U);
    ++counts[v];
  }
  // Each bucket expects 1000; 6 sigma is about 190.
  for (int c : counts) EXPECT_NEAR(c, 1000, 190);
}

TEST(CounterRng, UniformInUnitInterval) {
  CounterRng r(5);
  double sum = 0;
  for (int i = 0; i < 10000; ++i) {
    double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 10000, 0.5, 0.02);
}

TEST(CounterRng, PermutationAndSample) {
  CounterRng r(11);
  auto p = r.permutation(50);
  auto sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);

  auto s = r.sample(30, 12);
  EXPECT_EQ(s.size(), 12U);
  std::set<int> uniq(s.begin(), s.end());
  EXPECT_EQ(uniq.size(), 12U);
  for (int v : s) {
    EXPECT_GE(v, 0);
    EXPECT_LT(v, 30);
  }
}

}  // namespace
}  // namespace hintforge
