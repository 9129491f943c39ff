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

// Exhaustive reference computations for tiny graphs. Deliberately naive and
// independent of the library's search code.

#ifndef GCONN_TESTS_BRUTE_FORCE_H_
#define GCONN_TESTS_BRUTE_FORCE_H_

#include <vector>

#include "gconn/graph.h"

namespace gconn::testing {

// Every edge subset that is a tree containing `terminals` with all leaves in
// `terminals`, as edge lists. Enumerates subsets of at most n - 1 edges.
std::vector<std::vector<Edge>> MinimalSteinerTrees(
    const Graph& g, const std::vector<int>& terminals);

// Maximum number of internally disjoint S-trees by exhaustive packing over
// MinimalSteinerTrees.
int BruteKappaS(const Graph& g, const std::vector<int>& terminals);

// Minimum of BruteKappaS over all k-subsets.
int BruteKappaK(const Graph& g, int k);

// Smallest vertex cut by subset enumeration; n - 1 for complete graphs.
int BruteVertexConnectivity(const Graph& g);

// Maximum number of internally disjoint x-y paths by enumerating all simple
// paths.
int BruteLocalConnectivity(const Graph& g, int x, int y);

// Vertex on all three pairwise paths of a tree, by BFS path intersection.
int BruteMedian(const Graph& tree, int a, int b, int c);

// Every simple x-y path.
std::vector<std::vector<int>> AllSimplePaths(const Graph& g, int x, int y);

}  // namespace gconn::testing

#endif  // GCONN_TESTS_BRUTE_FORCE_H_
