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

#include "gconn/random_graphs.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gconn {

uint64_t UniformBelow(std::mt19937_64& rng, uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Largest multiple of bound that fits; draws above it are rejected.
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      std::numeric_limits<uint64_t>::max() % bound;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

Graph RandomConnectedNonComplete(std::mt19937_64& rng, int order) {
  if (order < 3) {
    throw std::invalid_argument("non-complete connected graphs need 3 vertices");
  }
  std::vector<Edge> tree;
  for (int v = 1; v < order; ++v) {
    tree.emplace_back(static_cast<int>(UniformBelow(rng, v)), v);
  }
  std::vector<Edge> extra;
  const uint64_t pairs = static_cast<uint64_t>(order) * (order - 1) / 2;
  const uint64_t attempts = UniformBelow(rng, pairs + 1);
  for (uint64_t i = 0; i < attempts; ++i) {
    const int a = static_cast<int>(UniformBelow(rng, order));
    const int b = static_cast<int>(UniformBelow(rng, order));
    if (a != b) extra.emplace_back(a, b);
  }
  std::vector<Edge> all = tree;
  all.insert(all.end(), extra.begin(), extra.end());
  Graph g = Graph::FromEdges(order, all);
  if (IsComplete(g)) {
    // Drop the first edge that is not in the tree.
    std::vector<Edge> kept;
    bool dropped = false;
    for (const Edge& e : g.edges()) {
      const bool in_tree =
          std::find(tree.begin(), tree.end(), e) != tree.end();
      if (!dropped && !in_tree) {
        dropped = true;
        continue;
      }
      kept.push_back(e);
    }
    g = Graph::FromEdges(order, kept);
  }
  return g;
}

std::vector<std::pair<Graph, Graph>> RandomFactorPairs(uint64_t seed,
                                                       int count,
                                                       int max_order) {
  if (max_order < 3) throw std::invalid_argument("max order must be >= 3");
  if (count < 0) throw std::invalid_argument("negative pair count");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Graph, Graph>> out;
  for (int i = 0; i < count; ++i) {
    const int a = 3 + static_cast<int>(UniformBelow(rng, max_order - 2));
    Graph first = RandomConnectedNonComplete(rng, a);
    const int b = 3 + static_cast<int>(UniformBelow(rng, max_order - 2));
    Graph second = RandomConnectedNonComplete(rng, b);
    out.emplace_back(std::move(first), std::move(second));
  }
  return out;
}

}  // namespace gconn
