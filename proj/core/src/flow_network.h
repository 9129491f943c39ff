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

#ifndef GCONN_SRC_FLOW_NETWORK_H_
#define GCONN_SRC_FLOW_NETWORK_H_

#include <deque>
#include <limits>
#include <vector>

#include "gconn/graph.h"

namespace gconn::internal {

inline constexpr int kInfiniteCapacity = std::numeric_limits<int>::max() / 4;

// Edmonds-Karp on small integer networks. Arcs are scanned in insertion
// order, so callers control tie-breaking by inserting low ids first.
class FlowNetwork {
 public:
  struct Arc {
    int to;
    int capacity;
    int flow;
    int reverse;
  };

  explicit FlowNetwork(int nodes) : arcs_(nodes) {}

  int AddNode() {
    arcs_.emplace_back();
    return static_cast<int>(arcs_.size()) - 1;
  }

  void AddArc(int from, int to, int capacity) {
    const int forward = static_cast<int>(arcs_[from].size());
    const int backward = static_cast<int>(arcs_[to].size()) + (from == to);
    arcs_[from].push_back({to, capacity, 0, backward});
    arcs_[to].push_back({from, 0, 0, forward});
  }

  // Augments until no path remains or `limit` units flow.
  int MaxFlow(int source, int sink, int limit) {
    int total = 0;
    std::vector<std::pair<int, int>> via(arcs_.size());
    while (total < limit) {
      std::fill(via.begin(), via.end(), std::pair<int, int>{-1, -1});
      via[source] = {source, -1};
      std::deque<int> queue{source};
      while (!queue.empty() && via[sink].first == -1) {
        const int u = queue.front();
        queue.pop_front();
        for (int i = 0; i < static_cast<int>(arcs_[u].size()); ++i) {
          const Arc& arc = arcs_[u][i];
          if (via[arc.to].first == -1 && arc.capacity - arc.flow > 0) {
            via[arc.to] = {u, i};
            queue.push_back(arc.to);
          }
        }
      }
      if (via[sink].first == -1) break;
      int push = limit - total;
      for (int v = sink; v != source; v = via[v].first) {
        const Arc& arc = arcs_[via[v].first][via[v].second];
        push = std::min(push, arc.capacity - arc.flow);
      }
      for (int v = sink; v != source; v = via[v].first) {
        Arc& arc = arcs_[via[v].first][via[v].second];
        arc.flow += push;
        arcs_[arc.to][arc.reverse].flow -= push;
      }
      total += push;
    }
    return total;
  }

  std::vector<Arc>& arcs(int node) { return arcs_[node]; }

 private:
  std::vector<std::vector<Arc>> arcs_;
};

// Vertex v becomes in-node 2v and out-node 2v+1.
inline int InNode(int v) { return 2 * v; }
inline int OutNode(int v) { return 2 * v + 1; }

// Builds the split network. `vertex_capacity[v]` bounds the flow through v;
// every edge gets `edge_capacity` in each direction. The edge {skip_u,
// skip_v} is omitted when both are non-negative.
inline FlowNetwork SplitNetwork(const Graph& graph,
                                const std::vector<int>& vertex_capacity,
                                int edge_capacity, int skip_u = -1,
                                int skip_v = -1) {
  FlowNetwork network(2 * graph.order());
  for (int v = 0; v < graph.order(); ++v) {
    network.AddArc(InNode(v), OutNode(v), vertex_capacity[v]);
  }
  for (int u = 0; u < graph.order(); ++u) {
    for (int w : graph.neighbors(u)) {
      if ((u == skip_u && w == skip_v) || (u == skip_v && w == skip_u)) {
        continue;
      }
      network.AddArc(OutNode(u), InNode(w), edge_capacity);
    }
  }
  return network;
}

// Walks one unit of flow from OutNode(start) until `stop(node)` is true,
// consuming flow as it goes. Returns the visited original vertices.
template <typename StopFn>
std::vector<int> TakeFlowPath(FlowNetwork& network, int start, StopFn stop) {
  std::vector<int> path{start};
  int node = OutNode(start);
  while (!stop(node)) {
    bool moved = false;
    for (auto& arc : network.arcs(node)) {
      if (arc.flow > 0 && arc.capacity > 0) {
        --arc.flow;
        node = arc.to;
        moved = true;
        break;
      }
    }
    if (!moved) break;
    if (node % 2 == 0 && !stop(node)) {
      // in-node: cross the vertex arc to its out-node
      path.push_back(node / 2);
      for (auto& arc : network.arcs(node)) {
        if (arc.to == node + 1 && arc.flow > 0) {
          --arc.flow;
          break;
        }
      }
      node = node + 1;
    }
  }
  return path;
}

}  // namespace gconn::internal

#endif  // GCONN_SRC_FLOW_NETWORK_H_
