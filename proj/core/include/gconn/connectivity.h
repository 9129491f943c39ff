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

// Classical vertex connectivity via unit-vertex-capacity maximum flow.
// Every routine splits vertices into an in/out pair and augments along
// breadth-first paths that scan neighbors in increasing id order, so the
// returned path systems are deterministic.

#ifndef GCONN_CONNECTIVITY_H_
#define GCONN_CONNECTIVITY_H_

#include <limits>
#include <span>
#include <vector>

#include "gconn/graph.h"

namespace gconn {

// Ordered vertex sequence; consecutive entries are adjacent.
using Path = std::vector<int>;

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

// Paths from `apex` to distinct members of `targets`, pairwise meeting only
// in the apex.
struct Fan {
  int apex = -1;
  std::vector<int> targets;
  std::vector<Path> paths;
  int requested = 0;
  // False when fewer than `requested` paths exist.
  bool complete = false;
};

// kappa(G): n-1 for complete graphs, 0 for disconnected graphs, otherwise the
// minimum over non-adjacent pairs of the local vertex connectivity. Throws
// std::invalid_argument on the empty graph.
int VertexConnectivity(const Graph& graph);

// Maximum number of x-y paths pairwise sharing only x and y, ignoring a
// direct xy edge.
int LocalConnectivity(const Graph& graph, int x, int y);

// Up to `want` x-y paths pairwise sharing only {x, y}. A direct edge counts
// as one path and is returned first. Throws std::invalid_argument if x == y.
std::vector<Path> DisjointPaths(const Graph& graph, int x, int y,
                                int want = kUnbounded);

// An (x, U)-fan of size k when one exists, else a maximum fan with
// `complete` cleared. Throws std::invalid_argument if |U| < k or x in U.
Fan FindFan(const Graph& graph, int x, std::span<const int> targets, int k);

struct Expansion {
  Graph graph;
  int new_vertex = -1;
};

// Adds one vertex adjacent to exactly `attach`. Throws std::invalid_argument
// when `attach` is empty or names a missing vertex.
Expansion Expand(const Graph& graph, std::span<const int> attach);

// Validates a path system: each path is a simple path of `graph` from x to
// y and any two share only their endpoints.
bool IsDisjointPathSystem(const Graph& graph, int x, int y,
                          std::span<const Path> paths);

// Validates a fan against the (x, U)-fan definition.
bool IsValidFan(const Graph& graph, const Fan& fan);

}  // namespace gconn

#endif  // GCONN_CONNECTIVITY_H_
