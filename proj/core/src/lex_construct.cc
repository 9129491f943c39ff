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

#include "gconn/lex_construct.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gconn {

namespace {

// A tree under construction, in product coordinates.
struct Draft {
  std::string tag;
  std::vector<std::pair<ProdVertex, ProdVertex>> edges;
  std::vector<Path> flat_paths;

  void Add(ProdVertex a, ProdVertex b) { edges.emplace_back(a, b); }
};

void RequireLexicographic(const ProductGraph& product) {
  if (product.kind() != ProductKind::kLexicographic) {
    throw std::invalid_argument("construction needs a lexicographic product");
  }
}

void RequireTriple(const ProductGraph& product, const Triple& s) {
  for (const ProdVertex& p : s) {
    if (!product.Contains(p)) {
      throw std::invalid_argument("terminal outside the product");
    }
  }
  if (s[0] == s[1] || s[1] == s[2] || s[0] == s[2]) {
    throw std::invalid_argument("terminals must be distinct");
  }
}

std::vector<int> FlatTerminals(const ProductGraph& product, const Triple& s) {
  return {product.Flatten(s[0]), product.Flatten(s[1]),
          product.Flatten(s[2])};
}

PackingVerdict Verify(const ProductGraph& product,
                      const std::vector<int>& terminals,
                      const std::vector<SteinerTree>& trees) {
  return VerifyPacking(product.graph(), terminals, trees,
                       [&product](int v) { return product.Label(v); });
}

LexFamily Finish(const ProductGraph& product, const Triple& s,
                 std::vector<Draft> drafts, int target) {
  LexFamily family;
  family.terminals = FlatTerminals(product, s);
  family.target = target;
  for (Draft& d : drafts) {
    std::vector<Edge> edges;
    for (const auto& [a, b] : d.edges) {
      edges.emplace_back(product.Flatten(a), product.Flatten(b));
    }
    for (const Path& p : d.flat_paths) {
      for (size_t i = 1; i < p.size(); ++i) edges.emplace_back(p[i - 1], p[i]);
    }
    family.trees.push_back(MakeSteinerTree(family.terminals, edges));
    family.provenance.push_back(std::move(d.tag));
  }
  family.verdict = Verify(product, family.terminals, family.trees);
  return family;
}

int DistinctFibers(const Triple& s) {
  std::set<int> g{s[0].g, s[1].g, s[2].g};
  return static_cast<int>(g.size());
}

// The part of `g_path` between `from` and `to`, oriented from -> to.
std::vector<int> Stretch(std::span<const int> g_path, int from, int to) {
  const auto a = std::find(g_path.begin(), g_path.end(), from);
  const auto b = std::find(g_path.begin(), g_path.end(), to);
  if (a == g_path.end() || b == g_path.end()) {
    throw std::invalid_argument("terminal fiber not on the given path");
  }
  std::vector<int> out;
  if (a <= b) {
    out.assign(a, b + 1);
  } else {
    out.assign(b, a + 1);
    std::reverse(out.begin(), out.end());
  }
  return out;
}

void RequireWalk(const Graph& g, std::span<const int> g_path) {
  std::vector<int> sorted(g_path.begin(), g_path.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("path repeats a vertex");
  }
  for (size_t i = 0; i < g_path.size(); ++i) {
    if (!g.contains(g_path[i])) {
      throw std::invalid_argument("path vertex outside the first factor");
    }
    if (i > 0 && !g.adjacent(g_path[i - 1], g_path[i])) {
      throw std::invalid_argument("path uses a non-edge of the first factor");
    }
  }
}

std::vector<int> Reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// Pair in fiber u[0], third terminal in the adjacent fiber u[1].
std::vector<Draft> AdjacentPair(const ProductGraph& product, int u0, int u1,
                                ProdVertex x, ProdVertex y, ProdVertex z) {
  const Graph& h_graph = product.second();
  const int m = product.second_order();
  std::vector<Draft> drafts;
  auto at0 = [u0](int h) { return ProdVertex{u0, h}; };
  auto at1 = [u1](int h) { return ProdVertex{u1, h}; };
  auto lanes = [&](std::initializer_list<int> skip) {
    for (int j = 0; j < m; ++j) {
      if (std::find(skip.begin(), skip.end(), j) != skip.end()) continue;
      Draft d{"pair-near-lane", {}, {}};
      d.Add(x, at1(j));
      d.Add(y, at1(j));
      d.Add(at0(j), at1(j));
      d.Add(z, at0(j));
      drafts.push_back(std::move(d));
    }
  };

  if (h_graph.adjacent(x.h, y.h)) {
    // The x-y path inside H(u0) is the single edge xy.
    if (z.h != x.h && z.h != y.h) {
      const ProdVertex x1 = at1(x.h), y1 = at1(y.h), z0 = at0(z.h);
      Draft a{"pair-near-corner", {}, {}};
      a.Add(x, x1);
      a.Add(x1, y);
      a.Add(y, z);
      Draft b{"pair-near-edge", {}, {}};
      b.Add(x, z);
      b.Add(x, y);
      Draft c{"pair-near-cross", {}, {}};
      c.Add(x, y1);
      c.Add(y1, z0);
      c.Add(y, y1);
      c.Add(z, z0);
      drafts.push_back(std::move(a));
      drafts.push_back(std::move(b));
      drafts.push_back(std::move(c));
      lanes({x.h, y.h, z.h});
    } else {
      // z's corresponding vertex is one of the pair; call that one y.
      if (z.h == x.h) std::swap(x, y);
      const ProdVertex x1 = at1(x.h);
      Draft a{"pair-near-corner", {}, {}};
      a.Add(x, z);
      a.Add(x, x1);
      a.Add(y, x1);
      Draft b{"pair-near-edge", {}, {}};
      b.Add(y, z);
      b.Add(x, y);
      drafts.push_back(std::move(a));
      drafts.push_back(std::move(b));
      lanes({x.h, y.h});
    }
    return drafts;
  }

  // x and y are not adjacent in H. Any x-y path inside H(u0) would have
  // interior vertices that the lane trees need, so route around it: one tree
  // through z, one through a neighbor of z inside H(u1), and the remaining
  // lanes of H(u1) matched with the free vertices of H(u0).
  int hub = -1;
  for (int w : h_graph.neighbors(z.h)) {
    hub = w;
    break;
  }
  if (hub < 0) throw std::invalid_argument("second factor is disconnected");
  Draft through{"pair-near-through", {}, {}};
  through.Add(x, z);
  through.Add(z, y);
  drafts.push_back(std::move(through));
  Draft star{"pair-near-hub", {}, {}};
  star.Add(x, at1(hub));
  star.Add(y, at1(hub));
  star.Add(at1(hub), z);
  drafts.push_back(std::move(star));

  std::vector<int> near;  // free lanes of H(u1)
  std::vector<int> far;   // free lanes of H(u0)
  for (int h = 0; h < m; ++h) {
    if (h != z.h && h != hub) near.push_back(h);
    if (h != x.h && h != y.h) far.push_back(h);
  }
  // Same-lane matches first, then the leftovers in order.
  std::vector<std::pair<int, int>> matched;
  std::vector<int> near_left, far_left;
  for (int h : near) {
    if (std::binary_search(far.begin(), far.end(), h)) {
      matched.emplace_back(h, h);
    } else {
      near_left.push_back(h);
    }
  }
  for (int h : far) {
    if (!std::binary_search(near.begin(), near.end(), h)) far_left.push_back(h);
  }
  for (size_t i = 0; i < near_left.size() && i < far_left.size(); ++i) {
    matched.emplace_back(near_left[i], far_left[i]);
  }
  std::sort(matched.begin(), matched.end());
  for (const auto& [hn, hf] : matched) {
    Draft d{"pair-near-matched", {}, {}};
    d.Add(x, at1(hn));
    d.Add(y, at1(hn));
    d.Add(at1(hn), at0(hf));
    d.Add(at0(hf), z);
    drafts.push_back(std::move(d));
  }
  return drafts;
}

// Terminals x, y, z in consecutive fibers u[0], u[1], u[2].
std::vector<Draft> Chain(const ProductGraph& product, std::vector<int> u,
                         ProdVertex x, ProdVertex y, ProdVertex z) {
  if (x.h == y.h && y.h != z.h) {
    // Mirror so that the shared lane sits between y and z.
    std::reverse(u.begin(), u.end());
    std::swap(x, z);
  }
  const int m = product.second_order();
  const int a = u[0], b = u[1], c = u[2];
  std::vector<Draft> drafts;
  auto lanes = [&](std::initializer_list<int> skip) {
    for (int j = 0; j < m; ++j) {
      if (std::find(skip.begin(), skip.end(), j) != skip.end()) continue;
      Draft d{"chain-lane", {}, {}};
      d.Add(x, {b, j});
      d.Add({a, j}, {b, j});
      d.Add(y, {a, j});
      d.Add(z, {b, j});
      drafts.push_back(std::move(d));
    }
  };
  Draft direct{"chain-direct", {}, {}};
  direct.Add(x, y);
  direct.Add(y, z);

  const bool xy = x.h == y.h, yz = y.h == z.h, xz = x.h == z.h;
  if (!xy && !yz && !xz) {
    const ProdVertex x1{b, x.h}, z0{a, z.h}, z1{b, z.h}, y0{a, y.h};
    Draft first{"chain-a", {}, {}};
    first.Add(x, x1);
    first.Add(x1, z0);
    first.Add(x1, z);
    first.Add(z0, y);
    Draft second{"chain-b", {}, {}};
    second.Add(x, z1);
    second.Add(z, z1);
    second.Add(y0, z1);
    second.Add(y, y0);
    drafts.push_back(std::move(first));
    drafts.push_back(std::move(second));
    drafts.push_back(std::move(direct));
    lanes({x.h, y.h, z.h});
  } else if (yz && !xy) {
    const ProdVertex x1{b, x.h}, x2{c, x.h};
    Draft second{"chain-a", {}, {}};
    second.Add(x, x1);
    second.Add(x1, x2);
    second.Add(y, x2);
    second.Add(x1, z);
    drafts.push_back(std::move(direct));
    drafts.push_back(std::move(second));
    lanes({x.h, y.h});
  } else if (xz && !xy) {
    const ProdVertex x1{b, x.h}, y0{a, y.h};
    Draft second{"chain-a", {}, {}};
    second.Add(x, x1);
    second.Add(x1, z);
    second.Add(x1, y0);
    second.Add(y0, y);
    drafts.push_back(std::move(direct));
    drafts.push_back(std::move(second));
    lanes({x.h, y.h});
  } else {
    drafts.push_back(std::move(direct));
    lanes({x.h});
  }
  return drafts;
}

// x in u[0], y in u[1], z in u.back() at least two fibers past y.
std::vector<Draft> Step(const ProductGraph& product,
                        const std::vector<int>& u, ProdVertex x, ProdVertex y,
                        ProdVertex z) {
  const int m = product.second_order();
  const int a = u[0], b = u[1];
  const std::vector<int> leg = Reversed({u.begin() + 1, u.end()});
  const std::vector<Path> fan = LaneFan(product, leg, z);
  std::vector<Draft> drafts;
  for (int j = 0; j < m; ++j) {
    Draft d;
    if (j == y.h) {
      d.tag = "step-direct";
      d.Add(x, y);
    } else if (j == x.h) {
      d.tag = "step-corner";
      d.Add(x, {b, x.h});
      d.Add({b, x.h}, {a, y.h});
      d.Add({a, y.h}, y);
    } else if (j == z.h) {
      d.tag = "step-cross";
      d.Add(x, {b, z.h});
      d.Add({b, z.h}, {a, z.h});
      d.Add({a, z.h}, y);
    } else {
      d.tag = "step-lane";
      d.Add(x, {b, j});
      d.Add({a, j}, {b, j});
      d.Add(y, {a, j});
    }
    d.flat_paths.push_back(fan[j]);
    drafts.push_back(std::move(d));
  }
  return drafts;
}

// Induced subgraph of the product on the fibers over `g_vertices`; local id
// i * m + h stands for (g_vertices[i], h).
Graph FiberBlock(const ProductGraph& product, std::span<const int> g_vertices) {
  const int m = product.second_order();
  const int size = static_cast<int>(g_vertices.size()) * m;
  auto flat = [&](int local) {
    return product.Flatten({g_vertices[local / m], local % m});
  };
  std::vector<Edge> edges;
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (product.graph().adjacent(flat(a), flat(b))) edges.emplace_back(a, b);
    }
  }
  return Graph::FromEdges(size, edges);
}

// Paths from `start` (flat) to the extra vertex attached to the last fiber
// of `leg`, mapped back to flat ids with `hub` substituted for the extra
// vertex. `leg` starts at start's fiber.
std::vector<Path> MengerLeg(const ProductGraph& product,
                            const std::vector<int>& leg, ProdVertex start,
                            ProdVertex hub) {
  const int m = product.second_order();
  const Graph block = FiberBlock(product, leg);
  std::vector<int> attach;
  for (int h = 0; h < m; ++h) {
    attach.push_back((static_cast<int>(leg.size()) - 1) * m + h);
  }
  const Expansion expanded = Expand(block, attach);
  const std::vector<Path> local =
      DisjointPaths(expanded.graph, start.h, expanded.new_vertex, m);
  std::vector<Path> out;
  for (const Path& p : local) {
    Path mapped;
    for (int v : p) {
      mapped.push_back(v == expanded.new_vertex
                           ? product.Flatten(hub)
                           : product.Flatten({leg[v / m], v % m}));
    }
    out.push_back(std::move(mapped));
  }
  return out;
}

// x in u[0], y in u[p], z in u.back(), both gaps at least two.
std::vector<Draft> Split(const ProductGraph& product,
                         const std::vector<int>& u, int p, ProdVertex x,
                         ProdVertex y, ProdVertex z, LegRouting routing) {
  const int m = product.second_order();
  const std::vector<int> left(u.begin(), u.begin() + p);
  const std::vector<int> right = Reversed({u.begin() + p + 1, u.end()});
  std::vector<Draft> drafts;
  if (routing == LegRouting::kLanes) {
    const auto from_x = LaneFan(product, left, x);
    const auto from_z = LaneFan(product, right, z);
    for (int j = 0; j < m; ++j) {
      Draft d{"split-lane", {}, {from_x[j], from_z[j]}};
      d.Add({left.back(), j}, y);
      d.Add(y, {right.back(), j});
      drafts.push_back(std::move(d));
    }
    return drafts;
  }
  const auto from_x = MengerLeg(product, left, x, y);
  const auto from_z = MengerLeg(product, right, z, y);
  const size_t count = std::min(from_x.size(), from_z.size());
  for (size_t j = 0; j < count; ++j) {
    drafts.push_back({"split-menger", {}, {from_x[j], from_z[j]}});
  }
  return drafts;
}

std::vector<Draft> TwoInFiberDrafts(const ProductGraph& product,
                                    std::span<const int> g_path,
                                    const Triple& s) {
  int pair_a = -1, pair_b = -1, lone = -1;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (s[i].g == s[j].g) {
        pair_a = i;
        pair_b = j;
        lone = 3 - i - j;
      }
    }
  }
  if (pair_a < 0 || s[lone].g == s[pair_a].g) {
    throw std::invalid_argument("exactly two terminals must share a fiber");
  }
  const ProdVertex x = s[pair_a], y = s[pair_b], z = s[lone];
  const std::vector<int> u = Stretch(g_path, x.g, z.g);
  if (u.size() == 2) return AdjacentPair(product, u[0], u[1], x, y, z);
  const std::vector<Path> fan =
      LaneFan(product, Reversed({u.begin() + 1, u.end()}), z);
  std::vector<Draft> drafts;
  for (int j = 0; j < product.second_order(); ++j) {
    Draft d{"pair-lane", {}, {fan[j]}};
    d.Add(x, {u[1], j});
    d.Add(y, {u[1], j});
    drafts.push_back(std::move(d));
  }
  return drafts;
}

std::vector<Draft> DistinctDrafts(const ProductGraph& product,
                                  std::span<const int> g_path,
                                  const Triple& s, LegRouting routing) {
  if (DistinctFibers(s) != 3) {
    throw std::invalid_argument("terminals must lie in three distinct fibers");
  }
  std::array<std::pair<long, int>, 3> order;
  for (int i = 0; i < 3; ++i) {
    const auto it = std::find(g_path.begin(), g_path.end(), s[i].g);
    if (it == g_path.end()) {
      throw std::invalid_argument("terminal fiber not on the given path");
    }
    order[i] = {it - g_path.begin(), i};
  }
  std::sort(order.begin(), order.end());
  std::vector<int> u(g_path.begin() + order[0].first,
                     g_path.begin() + order[2].first + 1);
  ProdVertex x = s[order[0].second], y = s[order[1].second],
             z = s[order[2].second];
  int gap1 = static_cast<int>(order[1].first - order[0].first);
  int gap2 = static_cast<int>(order[2].first - order[1].first);
  if (gap1 >= 2 && gap2 == 1) {
    std::reverse(u.begin(), u.end());
    std::swap(x, z);
    std::swap(gap1, gap2);
  }
  if (gap1 == 1 && gap2 == 1) return Chain(product, u, x, y, z);
  if (gap1 == 1) return Step(product, u, x, y, z);
  return Split(product, u, gap1, x, y, z, routing);
}

// Terminals on three legs of a G-tree meeting at `center`.
std::vector<Draft> TripodDrafts(const ProductGraph& product,
                                const Graph& g_tree, int center,
                                const Triple& s) {
  std::array<std::vector<Path>, 3> fans;
  for (int i = 0; i < 3; ++i) {
    fans[i] = LaneFan(product, TreePath(g_tree, s[i].g, center), s[i]);
  }
  std::vector<Draft> drafts;
  for (int j = 0; j < product.second_order(); ++j) {
    drafts.push_back({"tripod-lane", {}, {fans[0][j], fans[1][j], fans[2][j]}});
  }
  return drafts;
}

// First vertex of the a-b path reached from c; works on forests as long as
// a, b, c share a component.
int BranchVertex(const Graph& g_tree, int a, int b, int c) {
  const auto ab = TreePath(g_tree, a, b);
  for (int v : TreePath(g_tree, c, a)) {
    if (std::find(ab.begin(), ab.end(), v) != ab.end()) return v;
  }
  return a;
}

std::vector<Draft> TreeDrafts(const ProductGraph& product, const Graph& g_tree,
                              const Triple& s, LegRouting routing) {
  const int center = BranchVertex(g_tree, s[0].g, s[1].g, s[2].g);
  for (int i = 0; i < 3; ++i) {
    if (s[i].g != center) continue;
    const std::vector<int> path =
        TreePath(g_tree, s[(i + 1) % 3].g, s[(i + 2) % 3].g);
    return DistinctDrafts(product, path, s, routing);
  }
  return TripodDrafts(product, g_tree, center, s);
}

std::vector<int> PathOrder(const Graph& g) {
  bool is_path = IsTree(g);
  for (int v = 0; is_path && v < g.order(); ++v) is_path = g.degree(v) <= 2;
  if (!is_path) throw std::invalid_argument("first factor is not a path");
  int start = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  }
  std::vector<int> order{start};
  int prev = -1;
  while (static_cast<int>(order.size()) < g.order()) {
    const int cur = order.back();
    for (int w : g.neighbors(cur)) {
      if (w != prev) {
        prev = cur;
        order.push_back(w);
        break;
      }
    }
  }
  return order;
}

void RequireNontrivialFirst(const ProductGraph& product) {
  if (product.first_order() < 2) {
    throw std::invalid_argument("first factor needs at least two vertices");
  }
}

// Tracks which non-terminal vertices and edges earlier trees own.
class ClaimRegistry {
 public:
  ClaimRegistry(const ProductGraph& product, std::vector<int> terminals)
      : product_(product),
        terminals_(std::move(terminals)),
        vertex_(product.graph().order(), 0) {
    for (int t : terminals_) is_terminal_.insert(t);
  }

  // Accepts `tree` as is, after moving colliding vertices to free lanes of
  // their fibers, or not at all.
  std::optional<SteinerTree> Admit(const SteinerTree& tree, bool* relaned) {
    *relaned = false;
    std::vector<Edge> edges = tree.edges;
    std::set<int> in_tree(tree.vertices.begin(), tree.vertices.end());
    for (int v : tree.vertices) {
      if (is_terminal_.count(v) || !vertex_[v]) continue;
      const int replacement = FreeLaneFor(v, edges, in_tree);
      if (replacement < 0) return std::nullopt;
      for (Edge& e : edges) {
        if (e.u == v) e = Edge(replacement, e.v);
        else if (e.v == v) e = Edge(e.u, replacement);
      }
      in_tree.erase(v);
      in_tree.insert(replacement);
      *relaned = true;
    }
    for (const Edge& e : edges) {
      if (edges_.count(e)) return std::nullopt;
    }
    SteinerTree admitted = MakeSteinerTree(terminals_, edges);
    for (int v : admitted.vertices) {
      if (!is_terminal_.count(v)) vertex_[v] = 1;
    }
    edges_.insert(admitted.edges.begin(), admitted.edges.end());
    return admitted;
  }

 private:
  int FreeLaneFor(int v, const std::vector<Edge>& edges,
                  const std::set<int>& in_tree) const {
    const ProdVertex pv = product_.Unflatten(v);
    for (int h = 0; h < product_.second_order(); ++h) {
      const int w = product_.Flatten({pv.g, h});
      if (vertex_[w] || is_terminal_.count(w) || in_tree.count(w)) continue;
      bool fits = true;
      for (const Edge& e : edges) {
        if (e.u != v && e.v != v) continue;
        const int other = e.u == v ? e.v : e.u;
        if (!product_.graph().adjacent(w, other) ||
            edges_.count(Edge(w, other))) {
          fits = false;
          break;
        }
      }
      if (fits) return w;
    }
    return -1;
  }

  const ProductGraph& product_;
  std::vector<int> terminals_;
  std::set<int> is_terminal_;
  std::vector<uint8_t> vertex_;
  std::set<Edge> edges_;
};

}  // namespace

std::vector<Path> LaneFan(const ProductGraph& product,
                          std::span<const int> g_path, ProdVertex apex) {
  if (g_path.size() < 2) {
    throw std::invalid_argument("lane fan needs a target fiber past the apex");
  }
  if (!product.Contains(apex) || g_path.front() != apex.g) {
    throw std::invalid_argument("lane fan path must start at the apex fiber");
  }
  RequireWalk(product.first(), g_path);
  std::vector<Path> paths;
  for (int h = 0; h < product.second_order(); ++h) {
    Path p{product.Flatten(apex)};
    for (size_t i = 1; i < g_path.size(); ++i) {
      p.push_back(product.Flatten({g_path[i], h}));
    }
    paths.push_back(std::move(p));
  }
  return paths;
}

LexFamily ConstructSameFiber(const ProductGraph& product, const Triple& s,
                             int max_neighbors) {
  RequireLexicographic(product);
  RequireTriple(product, s);
  if (DistinctFibers(s) != 1) {
    throw std::invalid_argument("terminals are not in one fiber");
  }
  const auto neighbors = product.first().neighbors(s[0].g);
  if (neighbors.empty()) {
    throw std::invalid_argument("terminal fiber has no adjacent fiber");
  }
  const int used =
      std::min(static_cast<int>(neighbors.size()), std::max(max_neighbors, 0));
  std::vector<Draft> drafts;
  for (int i = 0; i < used; ++i) {
    for (int h = 0; h < product.second_order(); ++h) {
      Draft d{"star", {}, {}};
      for (const ProdVertex& t : s) d.Add(t, {neighbors[i], h});
      drafts.push_back(std::move(d));
    }
  }
  return Finish(product, s, std::move(drafts),
                used * product.second_order());
}

LexFamily ConstructTwoInFiber(const ProductGraph& product,
                              std::span<const int> g_path, const Triple& s) {
  RequireLexicographic(product);
  RequireTriple(product, s);
  RequireWalk(product.first(), g_path);
  return Finish(product, s, TwoInFiberDrafts(product, g_path, s),
                product.second_order());
}

LexFamily ConstructDistinctOnPath(const ProductGraph& product,
                                  std::span<const int> g_path,
                                  const Triple& s, LegRouting routing) {
  RequireLexicographic(product);
  RequireTriple(product, s);
  RequireWalk(product.first(), g_path);
  return Finish(product, s, DistinctDrafts(product, g_path, s, routing),
                product.second_order());
}

LexFamily ConstructPathLex(const ProductGraph& product, const Triple& s) {
  RequireLexicographic(product);
  RequireTriple(product, s);
  RequireNontrivialFirst(product);
  const std::vector<int> order = PathOrder(product.first());
  switch (DistinctFibers(s)) {
    case 1:
      return ConstructSameFiber(product, s, 1);
    case 2:
      return ConstructTwoInFiber(product, order, s);
    default:
      return ConstructDistinctOnPath(product, order, s, LegRouting::kMenger);
  }
}

LexFamily ConstructTreeLex(const ProductGraph& product, const Triple& s) {
  RequireLexicographic(product);
  RequireTriple(product, s);
  RequireNontrivialFirst(product);
  const Graph& tree = product.first();
  if (!IsTree(tree)) throw std::invalid_argument("first factor is not a tree");
  switch (DistinctFibers(s)) {
    case 1:
      return ConstructSameFiber(product, s, 1);
    case 2: {
      const int a = s[0].g;
      const int b = s[1].g != a ? s[1].g : s[2].g;
      return ConstructTwoInFiber(product, TreePath(tree, a, b), s);
    }
    default:
      return Finish(product, s, TreeDrafts(product, tree, s, LegRouting::kMenger),
                    product.second_order());
  }
}

LexFamily ConstructGeneralLex(const ProductGraph& product, const Triple& s,
                              const GeneralLexOptions& options) {
  RequireLexicographic(product);
  RequireTriple(product, s);
  RequireNontrivialFirst(product);
  const Graph& g = product.first();
  if (!IsConnected(g)) {
    throw std::invalid_argument("first factor is disconnected");
  }
  if (!IsConnected(product.second())) {
    throw std::invalid_argument("second factor is disconnected");
  }
  const int m = product.second_order();
  std::string note;
  int ell = 0;
  if (options.ell) {
    ell = *options.ell;
  } else {
    const ConnectivityResult r = Kappa3(g, options.search);
    ell = r.value;
    if (!r.exact) note = "kappa_3 of the first factor is only an upper bound";
  }

  // Families, one per G-level path or tree.
  std::vector<LexFamily> families;
  switch (DistinctFibers(s)) {
    case 1:
      families.push_back(ConstructSameFiber(product, s));
      break;
    case 2: {
      const int a = s[0].g;
      const int b = s[1].g != a ? s[1].g : s[2].g;
      for (const Path& path : DisjointPaths(g, a, b, ell)) {
        families.push_back(ConstructTwoInFiber(product, path, s));
      }
      break;
    }
    default: {
      const std::vector<int> projections{s[0].g, s[1].g, s[2].g};
      SearchOptions search = options.search;
      search.max_terminal_edge_trees = 1;
      bool exhausted = false;
      auto packing =
          FindTreePacking(g, projections, ell, search, &exhausted, nullptr);
      if (!packing) {
        search.max_terminal_edge_trees = kUnbounded;
        packing = FindTreePacking(g, projections, ell, search, &exhausted,
                                  nullptr);
      }
      if (!packing) {
        note += (note.empty() ? "" : "; ");
        note += exhausted ? "budget ran out on the first-factor packing"
                          : "first factor has fewer trees than requested";
        break;
      }
      for (const SteinerTree& tree : packing->trees) {
        const Graph g_tree = EdgeSubgraph(g, tree.edges);
        families.push_back(Finish(product, s,
                                  TreeDrafts(product, g_tree, s,
                                             LegRouting::kLanes),
                                  m));
      }
      break;
    }
  }

  LexFamily result;
  result.terminals = FlatTerminals(product, s);
  result.target = ell * m;
  ClaimRegistry registry(product, result.terminals);
  int dropped = 0;
  for (const LexFamily& family : families) {
    for (int i = 0; i < family.size(); ++i) {
      bool relaned = false;
      auto admitted = registry.Admit(family.trees[i], &relaned);
      if (!admitted) {
        ++dropped;
        continue;
      }
      result.trees.push_back(std::move(*admitted));
      result.provenance.push_back(relaned ? "relaned:" + family.provenance[i]
                                          : family.provenance[i]);
      if (relaned) ++result.relaned_trees;
    }
  }
  result.verdict = Verify(product, result.terminals, result.trees);
  if (dropped > 0) {
    note += (note.empty() ? "" : "; ");
    note += std::to_string(dropped) + " colliding trees dropped";
  }

  if (!result.ok() && options.allow_fallback) {
    try {
      const TreePacking exact =
          MaxTreePacking(product.graph(), result.terminals, options.search);
      if (exact.size() > result.size() || !result.verdict.valid) {
        result.trees = exact.trees;
        result.provenance.assign(exact.trees.size(), "oracle");
        result.used_fallback = true;
        result.relaned_trees = 0;
        note += (note.empty() ? "" : "; ");
        note += "composition could not be repaired; exact search used";
        if (!exact.optimal) note += " (budget exhausted)";
        result.verdict = Verify(product, result.terminals, result.trees);
      }
    } catch (const std::invalid_argument& e) {
      note += (note.empty() ? "" : "; ");
      note += std::string("fallback unavailable: ") + e.what();
    }
  }
  result.note = std::move(note);
  return result;
}

Triple ParseTriple(const ProductGraph& product, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<ProdVertex> parsed;
  std::string token;
  while (in >> token) parsed.push_back(product.ParseLabel(token));
  if (parsed.size() != 3) {
    throw InputError("expected three terminals \"g:h g:h g:h\", got \"" +
                     std::string(text) + "\"");
  }
  Triple s{parsed[0], parsed[1], parsed[2]};
  if (s[0] == s[1] || s[1] == s[2] || s[0] == s[2]) {
    throw InputError("terminals must be distinct");
  }
  return s;
}

std::vector<Triple> AllTriples(const ProductGraph& product) {
  const int n = product.graph().order();
  std::vector<Triple> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        out.push_back(
            {product.Unflatten(a), product.Unflatten(b), product.Unflatten(c)});
      }
    }
  }
  return out;
}

}  // namespace gconn
