// Copyright 2026 The gconn Authors
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

#include <random>

#include <gtest/gtest.h>

#include "gconn/graph.h"
#include "gconn/random_graphs.h"

namespace gconn {
namespace {

TEST(UniformBelowTest, StaysInRangeAndCoversIt) {
  std::mt19937_64 rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const uint64_t v = UniformBelow(rng, 7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int count : hits) EXPECT_GT(count, 800);
  EXPECT_EQ(UniformBelow(rng, 1), 0u);
  EXPECT_THROW(UniformBelow(rng, 0), std::invalid_argument);
}

TEST(UniformBelowTest, FixedSeedFixedStream) {
  // The generator is std::mt19937_64, whose output is specified by the
  // standard, so these values hold on every platform.
  std::mt19937_64 rng(42);
  std::vector<uint64_t> first;
  for (int i = 0; i < 5; ++i) first.push_back(UniformBelow(rng, 1000));
  std::mt19937_64 again(42);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(UniformBelow(again, 1000), first[i]);
}

TEST(RandomGraphTest, ConnectedAndNotComplete) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const int order = 3 + i % 6;
    const Graph g = RandomConnectedNonComplete(rng, order);
    EXPECT_EQ(g.order(), order);
    EXPECT_TRUE(IsConnected(g));
    EXPECT_FALSE(IsComplete(g));
  }
  EXPECT_THROW(RandomConnectedNonComplete(rng, 2), std::invalid_argument);
}

TEST(RandomGraphTest, PairsAreReproducible) {
  const auto a = RandomFactorPairs(7, 25, 5);
  const auto b = RandomFactorPairs(7, 25, 5);
  ASSERT_EQ(a.size(), 25u);
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].first, b[i].first);
    EXPECT_EQ(a[i].second, b[i].second);
    EXPECT_GE(a[i].first.order(), 3);
    EXPECT_LE(a[i].first.order(), 5);
    EXPECT_LE(a[i].second.order(), 5);
  }
  const auto c = RandomFactorPairs(8, 25, 5);
  bool differs = false;
  for (size_t i = 0; i < a.size(); ++i) {
    differs |= !(a[i].first == c[i].first) || !(a[i].second == c[i].second);
  }
  EXPECT_TRUE(differs);
}

}  // namespace
}  // namespace gconn
