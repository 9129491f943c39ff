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

#include "gconn/graph.h"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

namespace gconn {

Graph::Graph(int order)
    : order_(order),
      adjacency_(order < 0 ? 0 : order),
      matrix_(order < 0 ? 0 : static_cast<size_t>(order) * order, 0) {
  if (order < 0) throw std::invalid_argument("negative graph order");
}

Graph Graph::FromEdges(int order, std::span<const Edge> edges) {
  Graph graph(order);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= order) {
      throw InputError("edge " + std::to_string(e.u) + " " +
                       std::to_string(e.v) + " has a vertex outside 0.." +
                       std::to_string(order - 1));
    }
    if (e.u == e.v) {
      throw InputError("loop at vertex " + std::to_string(e.u));
    }
    uint8_t& cell = graph.matrix_[static_cast<size_t>(e.u) * order + e.v];
    if (cell) continue;
    cell = 1;
    graph.matrix_[static_cast<size_t>(e.v) * order + e.u] = 1;
    graph.adjacency_[e.u].push_back(e.v);
    graph.adjacency_[e.v].push_back(e.u);
    ++graph.size_;
  }
  for (auto& list : graph.adjacency_) std::sort(list.begin(), list.end());
  return graph;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (int u = 0; u < order_; ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Family(FamilyKind kind, int size) {
  std::vector<Edge> edges;
  switch (kind) {
    case FamilyKind::kPath:
      if (size < 1) throw InputError("path needs at least 1 vertex");
      for (int i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
      break;
    case FamilyKind::kCycle:
      if (size < 3) throw InputError("cycle needs at least 3 vertices");
      for (int i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
      break;
    case FamilyKind::kComplete:
      if (size < 1) throw InputError("complete graph needs at least 1 vertex");
      for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) edges.emplace_back(i, j);
      }
      break;
    case FamilyKind::kStar:
      if (size < 2) throw InputError("star needs at least 2 vertices");
      for (int i = 1; i < size; ++i) edges.emplace_back(0, i);
      break;
  }
  return Graph::FromEdges(size, edges);
}

namespace {

int ParseInt(std::string_view token, std::string_view context) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw InputError("expected an integer in '" + std::string(context) +
                     "', got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph ParseFamilySpec(std::string_view spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("family spec must look like name:size, got '" +
                     std::string(spec) + "'");
  }
  const std::string_view name = spec.substr(0, colon);
  if (name == "graph6") return ParseGraph6(spec.substr(colon + 1));
  const int size = ParseInt(spec.substr(colon + 1), spec);
  if (name == "path") return Family(FamilyKind::kPath, size);
  if (name == "cycle") return Family(FamilyKind::kCycle, size);
  if (name == "complete") return Family(FamilyKind::kComplete, size);
  if (name == "star") return Family(FamilyKind::kStar, size);
  throw InputError("unknown family '" + std::string(name) + "'");
}

Graph ReadEdgeList(std::istream& in) {
  std::string line;
  int line_number = 0;
  int order = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first[0] == '#') continue;
    const std::string where = "line " + std::to_string(line_number);
    if (order < 0) {
      order = ParseInt(first, where);
      if (order < 0) throw InputError(where + ": negative order");
      continue;
    }
    std::string second;
    std::string extra;
    if (!(fields >> second) || (fields >> extra)) {
      throw InputError(where + ": expected 'u v', got '" + line + "'");
    }
    const int u = ParseInt(first, where);
    const int v = ParseInt(second, where);
    if (u < 0 || u >= order || v < 0 || v >= order) {
      throw InputError(where + ": vertex out of range in '" + line + "'");
    }
    if (u == v) throw InputError(where + ": loop in '" + line + "'");
    edges.emplace_back(u, v);
  }
  if (order < 0) throw InputError("edge list is missing the order line");
  return Graph::FromEdges(order, edges);
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return ReadEdgeList(in);
}

std::string WriteEdgeList(const Graph& graph) {
  std::ostringstream out;
  out << graph.order() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph ParseGraph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw InputError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw InputError("invalid graph6 character");
  }
  const int order = text[0] - 63;
  if (order > 62) throw InputError("graph6 orders above 62 are unsupported");
  const size_t needed = (static_cast<size_t>(order) * (order - 1) / 2 + 5) / 6;
  if (text.size() - 1 != needed) throw InputError("graph6 length mismatch");
  std::vector<Edge> edges;
  size_t bit = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int chunk = text[1 + bit / 6] - 63;
      if (chunk & (1 << (5 - bit % 6))) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(order, edges);
}

std::string WriteGraph6(const Graph& graph) {
  const int order = graph.order();
  if (order > 62) throw InputError("graph6 orders above 62 are unsupported");
  std::string out(1, static_cast<char>(63 + order));
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (graph.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

namespace {

std::vector<int> BfsParents(const Graph& graph, int root) {
  std::vector<int> parent(graph.order(), -2);
  std::deque<int> queue{root};
  parent[root] = -1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : graph.neighbors(u)) {
      if (parent[w] == -2) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return parent;
}

}  // namespace

bool IsConnected(const Graph& graph) {
  if (graph.empty()) return false;
  const auto parent = BfsParents(graph, 0);
  return std::none_of(parent.begin(), parent.end(),
                      [](int p) { return p == -2; });
}

bool IsComplete(const Graph& graph) {
  const long long n = graph.order();
  return graph.size() == n * (n - 1) / 2;
}

bool IsTree(const Graph& graph) {
  return IsConnected(graph) && graph.size() == graph.order() - 1;
}

int MinDegree(const Graph& graph) {
  if (graph.empty()) throw std::invalid_argument("empty graph has no degree");
  int best = graph.degree(0);
  for (int v = 1; v < graph.order(); ++v) best = std::min(best, graph.degree(v));
  return best;
}

Graph EdgeSubgraph(const Graph& graph, std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (!graph.contains(e.u) || !graph.contains(e.v) ||
        !graph.adjacent(e.u, e.v)) {
      throw std::invalid_argument("edge subgraph uses a non-edge");
    }
  }
  return Graph::FromEdges(graph.order(), edges);
}

std::vector<int> TreePath(const Graph& tree, int a, int b) {
  const auto parent = BfsParents(tree, a);
  if (parent[b] == -2) throw std::invalid_argument("vertices not connected");
  std::vector<int> path;
  for (int v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

int TreeMedian(const Graph& tree, int a, int b, int c) {
  if (!IsTree(tree)) throw std::invalid_argument("graph is not a tree");
  if (a == b || b == c || a == c) {
    throw std::invalid_argument("median needs three distinct vertices");
  }
  for (int v : {a, b, c}) {
    if (!tree.contains(v)) throw std::invalid_argument("vertex out of range");
  }
  // Walking from c toward a, the median is the first vertex on the a-b path.
  const auto ab = TreePath(tree, a, b);
  std::vector<uint8_t> on_ab(tree.order(), 0);
  for (int v : ab) on_ab[v] = 1;
  for (int v : TreePath(tree, c, a)) {
    if (on_ab[v]) return v;
  }
  return a;  // unreachable for a tree
}

}  // namespace gconn
