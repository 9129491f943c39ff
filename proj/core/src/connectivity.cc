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

#include "gconn/connectivity.h"

#include <algorithm>
#include <stdexcept>

#include "flow_network.h"

namespace gconn {

using internal::FlowNetwork;
using internal::InNode;
using internal::OutNode;

namespace {

std::vector<int> UnitCapacities(const Graph& graph) {
  return std::vector<int>(graph.order(), 1);
}

void RequireVertex(const Graph& graph, int v) {
  if (!graph.contains(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is not in the graph");
  }
}

}  // namespace

int LocalConnectivity(const Graph& graph, int x, int y) {
  RequireVertex(graph, x);
  RequireVertex(graph, y);
  if (x == y) throw std::invalid_argument("local connectivity needs x != y");
  FlowNetwork network =
      internal::SplitNetwork(graph, UnitCapacities(graph), 1, x, y);
  return network.MaxFlow(OutNode(x), InNode(y), kUnbounded);
}

int VertexConnectivity(const Graph& graph) {
  if (graph.empty()) {
    throw std::invalid_argument("connectivity of the empty graph");
  }
  if (!IsConnected(graph)) return 0;
  const int n = graph.order();
  if (IsComplete(graph)) return n - 1;
  int best = n - 1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (graph.adjacent(u, v)) continue;
      FlowNetwork network =
          internal::SplitNetwork(graph, UnitCapacities(graph), 1);
      best = std::min(best, network.MaxFlow(OutNode(u), InNode(v), best));
    }
  }
  return best;
}

std::vector<Path> DisjointPaths(const Graph& graph, int x, int y, int want) {
  RequireVertex(graph, x);
  RequireVertex(graph, y);
  if (x == y) throw std::invalid_argument("disjoint paths need x != y");
  std::vector<Path> paths;
  if (want <= 0) return paths;
  if (graph.adjacent(x, y)) {
    paths.push_back({x, y});
    if (want == 1) return paths;
  }
  FlowNetwork network =
      internal::SplitNetwork(graph, UnitCapacities(graph), 1, x, y);
  const int budget = want == kUnbounded ? kUnbounded
                                        : want - static_cast<int>(paths.size());
  const int flow = network.MaxFlow(OutNode(x), InNode(y), budget);
  const int sink = InNode(y);
  for (int i = 0; i < flow; ++i) {
    Path path = internal::TakeFlowPath(network, x,
                                       [sink](int node) { return node == sink; });
    path.push_back(y);
    paths.push_back(std::move(path));
  }
  return paths;
}

Fan FindFan(const Graph& graph, int x, std::span<const int> targets, int k) {
  RequireVertex(graph, x);
  if (static_cast<int>(targets.size()) < k) {
    throw std::invalid_argument("fan target set smaller than requested size");
  }
  std::vector<int> sorted_targets(targets.begin(), targets.end());
  std::sort(sorted_targets.begin(), sorted_targets.end());
  for (int t : sorted_targets) {
    RequireVertex(graph, t);
    if (t == x) throw std::invalid_argument("fan apex lies in the target set");
  }
  FlowNetwork network = internal::SplitNetwork(graph, UnitCapacities(graph), 1);
  const int sink = network.AddNode();
  for (int t : sorted_targets) network.AddArc(OutNode(t), sink, 1);
  const int flow = network.MaxFlow(OutNode(x), sink, k);

  Fan fan;
  fan.apex = x;
  fan.targets = sorted_targets;
  fan.requested = k;
  for (int i = 0; i < flow; ++i) {
    fan.paths.push_back(internal::TakeFlowPath(
        network, x, [sink](int node) { return node == sink; }));
  }
  std::sort(fan.paths.begin(), fan.paths.end(),
            [](const Path& a, const Path& b) { return a.back() < b.back(); });
  fan.complete = flow == k;
  return fan;
}

Expansion Expand(const Graph& graph, std::span<const int> attach) {
  if (attach.empty()) throw std::invalid_argument("expansion set is empty");
  std::vector<Edge> edges = graph.edges();
  const int y = graph.order();
  for (int v : attach) {
    RequireVertex(graph, v);
    edges.emplace_back(v, y);
  }
  return {Graph::FromEdges(graph.order() + 1, edges), y};
}

namespace {

bool IsSimplePath(const Graph& graph, const Path& path) {
  if (path.empty()) return false;
  for (size_t i = 0; i < path.size(); ++i) {
    if (!graph.contains(path[i])) return false;
    if (i > 0 && !graph.adjacent(path[i - 1], path[i])) return false;
  }
  Path sorted = path;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool IsDisjointPathSystem(const Graph& graph, int x, int y,
                          std::span<const Path> paths) {
  std::vector<int> owner(graph.order(), -1);
  int direct_edges = 0;
  for (size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    if (p.size() < 2 || p.front() != x || p.back() != y) return false;
    if (!IsSimplePath(graph, p)) return false;
    if (p.size() == 2) ++direct_edges;
    for (size_t j = 1; j + 1 < p.size(); ++j) {
      if (owner[p[j]] != -1) return false;
      owner[p[j]] = static_cast<int>(i);
    }
  }
  return direct_edges <= 1;
}

bool IsValidFan(const Graph& graph, const Fan& fan) {
  std::vector<int> owner(graph.order(), -1);
  std::vector<int> sorted_targets = fan.targets;
  std::sort(sorted_targets.begin(), sorted_targets.end());
  for (size_t i = 0; i < fan.paths.size(); ++i) {
    const Path& p = fan.paths[i];
    if (p.size() < 2 || p.front() != fan.apex) return false;
    if (!IsSimplePath(graph, p)) return false;
    if (!std::binary_search(sorted_targets.begin(), sorted_targets.end(),
                            p.back())) {
      return false;
    }
    for (size_t j = 1; j < p.size(); ++j) {
      if (owner[p[j]] != -1) return false;
      owner[p[j]] = static_cast<int>(i);
    }
  }
  return fan.complete == (static_cast<int>(fan.paths.size()) == fan.requested);
}

}  // namespace gconn
