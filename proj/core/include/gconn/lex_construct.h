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

// Explicit families of internally disjoint S-trees, |S| = 3, in
// lexicographic products G o H.
//
// Terminals are product vertices (g, h). A "lane" is the set of vertices
// sharing one h-coordinate along a walk of G; routing each tree down its own
// lane keeps trees apart in every fiber they cross. All families are checked
// with VerifyPacking before they are returned.
//
// Every tree carries a provenance tag naming the pattern that produced it:
//   star               three edges from the terminals to one vertex of an
//                      adjacent fiber
//   pair-lane          pair in one fiber, third terminal two or more fibers
//                      away, joined along a lane
//   pair-near-*        pair in one fiber, third terminal in an adjacent fiber
//                      (edge / cross / corner / lane / hub / matched)
//   chain-*            terminals in three consecutive fibers
//   step-*             two adjacent terminal fibers, third one further away
//   split-menger       terminals spread out, joined by Menger paths at the
//                      middle terminal
//   split-lane         same, routed along lanes
//   tripod-lane        terminals on three legs of a G-tree, joined in the
//                      branch fiber
//   relaned:<tag>      <tag> after moving a vertex to a free lane
//   oracle             exact search fallback

#ifndef GCONN_LEX_CONSTRUCT_H_
#define GCONN_LEX_CONSTRUCT_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gconn/connectivity.h"
#include "gconn/product.h"
#include "gconn/steiner.h"

namespace gconn {

using Triple = std::array<ProdVertex, 3>;

struct LexFamily {
  std::vector<int> terminals;  // flat ids in caller order
  std::vector<SteinerTree> trees;
  std::vector<std::string> provenance;  // one tag per tree
  int target = 0;                       // number of trees promised
  bool used_fallback = false;
  int relaned_trees = 0;
  std::string note;
  PackingVerdict verdict;

  int size() const { return static_cast<int>(trees.size()); }
  bool ok() const { return verdict.valid && size() >= target; }
};

// m paths in G o H from `apex` along `g_path` (which starts at apex.g). Path
// h runs apex -> (g_path[1], h) -> ... -> (g_path.back(), h), so the paths
// share only the apex and meet each later fiber once. Throws
// std::invalid_argument if g_path has fewer than two vertices, does not start
// at apex.g, or is not a walk in G.
std::vector<Path> LaneFan(const ProductGraph& product,
                          std::span<const int> g_path, ProdVertex apex);

// Terminals in one fiber H(u): a star through (w, h) for every lane h and
// every G-neighbor w of u, capped at `max_neighbors` neighbors (lowest ids
// first).
LexFamily ConstructSameFiber(const ProductGraph& product, const Triple& s,
                             int max_neighbors = kUnbounded);

// Exactly two terminals share a fiber. `g_path` is a path of G through the
// two terminal fibers; only its stretch between them is used. Produces m
// trees. When the fibers are adjacent, intra-fiber edges used by the family
// lie on one path inside one fiber.
LexFamily ConstructTwoInFiber(const ProductGraph& product,
                              std::span<const int> g_path, const Triple& s);

enum class LegRouting {
  kMenger,  // max-flow paths in the expanded leg product
  kLanes,   // one lane per tree; never touches another G-vertex's fiber
};

// Terminals in three distinct fibers, all on `g_path`. Produces m trees.
// `routing` only matters when both gaps along the path are at least two.
LexFamily ConstructDistinctOnPath(const ProductGraph& product,
                                  std::span<const int> g_path,
                                  const Triple& s,
                                  LegRouting routing = LegRouting::kMenger);

// G must be a path graph on at least two vertices. Exactly m trees.
LexFamily ConstructPathLex(const ProductGraph& product, const Triple& s);

// G must be a tree on at least two vertices. Exactly m trees.
LexFamily ConstructTreeLex(const ProductGraph& product, const Triple& s);

struct GeneralLexOptions {
  // kappa_3(G); computed exactly when absent.
  std::optional<int> ell;
  SearchOptions search;
  // Exact search on G o H when composition cannot be repaired.
  bool allow_fallback = true;
};

// At least m * ell trees for connected G on at least two vertices: one
// family per G-level path or tree, with a claim registry that moves a
// colliding vertex to a free lane, and an exact-search fallback as a last
// resort (flagged in the result).
LexFamily ConstructGeneralLex(const ProductGraph& product, const Triple& s,
                              const GeneralLexOptions& options = {});

// Parses "g:h g:h g:h". Throws InputError.
Triple ParseTriple(const ProductGraph& product, std::string_view text);

// Every 3-subset of V(G o H) in lexicographic order of flat ids.
std::vector<Triple> AllTriples(const ProductGraph& product);

}  // namespace gconn

#endif  // GCONN_LEX_CONSTRUCT_H_
