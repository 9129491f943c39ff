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

#ifndef GCONN_GRAPH_H_
#define GCONN_GRAPH_H_

#include <compare>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gconn {

// Thrown for malformed user input: bad edge lists, bad family specs, bad
// terminal syntax. The message names the offending token or line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Finite simple undirected graph on vertices 0..order()-1. Immutable once
// built; adjacency is kept both as sorted lists and as a dense matrix.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on `order` vertices.
  explicit Graph(int order);

  // Builds a graph from an edge list. Duplicate edges (in either
  // orientation) collapse to one. Throws InputError on loops or ids
  // outside 0..order-1.
  static Graph FromEdges(int order, std::span<const Edge> edges);

  int order() const { return order_; }
  int size() const { return size_; }
  bool empty() const { return order_ == 0; }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int u, int v) const {
    return matrix_[static_cast<size_t>(u) * order_ + v] != 0;
  }
  bool contains(int v) const { return v >= 0 && v < order_; }

  // All edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && adjacency_ == other.adjacency_;
  }

 private:
  int order_ = 0;
  int size_ = 0;
  std::vector<std::vector<int>> adjacency_;
  std::vector<uint8_t> matrix_;
};

enum class FamilyKind { kPath, kCycle, kComplete, kStar };

// Canonically labeled standard families. Paths join i to i+1, cycles add
// the closing edge, stars have their center at vertex 0. `size` is the
// number of vertices. Throws InputError below the minimum size (path and
// complete need 1, star needs 2, cycle needs 3).
Graph Family(FamilyKind kind, int size);

// Parses "path:4", "cycle:5", "complete:6", "star:4", or "graph6:<code>".
Graph ParseFamilySpec(std::string_view spec);

// Edge-list text: first non-comment line is the order n, every further
// line holds "u v". Lines starting with '#' are skipped.
Graph ReadEdgeList(std::istream& in);
Graph ReadEdgeListFile(const std::string& path);
std::string WriteEdgeList(const Graph& graph);

// graph6 decoding for orders up to 62.
Graph ParseGraph6(std::string_view text);

// graph6 encoding of `graph` (orders up to 62).
std::string WriteGraph6(const Graph& graph);

bool IsConnected(const Graph& graph);
bool IsComplete(const Graph& graph);
bool IsTree(const Graph& graph);

// Minimum vertex degree. Throws std::invalid_argument on the empty graph.
int MinDegree(const Graph& graph);

// Subgraph on the same vertex ids keeping only `edges` (which must be edges
// of `graph`).
Graph EdgeSubgraph(const Graph& graph, std::span<const Edge> edges);

// Unique path between a and b in a tree, a first.
std::vector<int> TreePath(const Graph& tree, int a, int b);

// The branch vertex of the minimal subtree spanning {a, b, c}: the single
// vertex common to all three pairwise tree paths. Throws
// std::invalid_argument if `tree` is not a tree or the vertices are not
// distinct.
int TreeMedian(const Graph& tree, int a, int b, int c);

}  // namespace gconn

#endif  // GCONN_GRAPH_H_
