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

// Seeded generation of small random factor graphs. The generator is
// std::mt19937_64, whose output sequence is fixed by the C++ standard;
// bounded draws use rejection sampling instead of std distributions, whose
// algorithms differ between standard libraries. A seed therefore
// reproduces the same graphs on every platform.

#ifndef GCONN_RANDOM_GRAPHS_H_
#define GCONN_RANDOM_GRAPHS_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gconn/graph.h"

namespace gconn {

// Uniform integer in [0, bound). Throws std::invalid_argument on bound 0.
uint64_t UniformBelow(std::mt19937_64& rng, uint64_t bound);

// Connected, non-complete graph on `order` >= 3 vertices: a random
// attachment tree plus random extra edges, with one non-tree edge removed
// if the result came out complete.
Graph RandomConnectedNonComplete(std::mt19937_64& rng, int order);

// `count` factor pairs with orders drawn uniformly from 3..max_order.
std::vector<std::pair<Graph, Graph>> RandomFactorPairs(uint64_t seed,
                                                       int count,
                                                       int max_order);

}  // namespace gconn

#endif  // GCONN_RANDOM_GRAPHS_H_
