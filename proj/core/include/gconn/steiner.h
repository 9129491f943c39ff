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

// Exact packing of internally disjoint Steiner trees.
//
// Two S-trees are internally disjoint when they share no edge and their
// vertex sets meet exactly in S. kappa(S) is the size of a largest such
// family and kappa_k(G) the minimum of kappa(S) over all k-sets S.
//
// The search works on minimal S-trees only (every leaf is a terminal).
// Because a non-terminal vertex can belong to at most one tree, every edge
// touching a non-terminal is owned by that vertex's tree, and the only edges
// two trees could compete for are edges between terminals. A tree is
// therefore described by the pair (W, F): the non-terminals it uses and the
// terminal-terminal edges it uses. The oracle enumerates the
// inclusion-minimal pairs that connect S and then solves a set packing
// problem over them by branch and bound.

#ifndef GCONN_STEINER_H_
#define GCONN_STEINER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gconn/connectivity.h"
#include "gconn/graph.h"

namespace gconn {

// A subtree of a host graph. `vertices` and `edges` are kept sorted.
struct SteinerTree {
  std::vector<int> vertices;
  std::vector<Edge> edges;

  bool operator==(const SteinerTree&) const = default;
};

// Builds a tree record whose vertex set is the edge endpoints plus the
// terminals. A terminal with no incident edge therefore shows up as a
// disconnected vertex and fails verification.
SteinerTree MakeSteinerTree(std::span<const int> terminals,
                            std::span<const Edge> edges);

struct PackingVerdict {
  bool valid = true;
  std::string message;
  int first_tree = -1;   // offending tree, or first tree of the pair
  int second_tree = -1;  // second tree of an offending pair
};

// Accepts iff every tree is an S-tree of `graph` and every pair shares no
// edge and meets exactly in S. Reports the first violation found, naming
// vertices through `label` when one is given.
PackingVerdict VerifyPacking(
    const Graph& graph, std::span<const int> terminals,
    std::span<const SteinerTree> trees,
    const std::function<std::string(int)>& label = nullptr);

inline constexpr int64_t kDefaultSearchBudget = 10'000'000;

struct SearchOptions {
  // Maximum number of branch-and-bound nodes per terminal set.
  int64_t budget = kDefaultSearchBudget;
  // Caps how many trees may use an edge between two terminals. Used when a
  // caller prefers packings whose trees avoid such edges.
  int max_terminal_edge_trees = kUnbounded;
};

struct SearchStats {
  int64_t nodes = 0;
  int candidates = 0;
  int upper_bound = 0;
};

struct TreePacking {
  std::vector<int> terminals;  // sorted
  std::vector<SteinerTree> trees;
  // False when the node budget ran out before optimality was proved; the
  // trees are then only a lower bound.
  bool optimal = true;
  bool verified = false;
  SearchStats stats;

  int size() const { return static_cast<int>(trees.size()); }
};

// Upper bound on kappa(S) from terminal degrees, from pairwise cuts in which
// only non-terminals have unit capacity, and from counting the resources a
// tree needs.
int PackingUpperBound(const Graph& graph, std::span<const int> terminals);

// A packing of exactly `target` trees, or nullopt if none exists. When the
// budget runs out first, nullopt is returned and `exhausted` is set.
std::optional<TreePacking> FindTreePacking(const Graph& graph,
                                           std::span<const int> terminals,
                                           int target,
                                           const SearchOptions& options = {},
                                           bool* exhausted = nullptr,
                                           int64_t* nodes = nullptr);

// A maximum packing. Throws std::invalid_argument for fewer than two
// terminals, repeated terminals, or ids outside the graph.
TreePacking MaxTreePacking(const Graph& graph, std::span<const int> terminals,
                           const SearchOptions& options = {});

struct ConnectivityResult {
  int k = 0;
  int value = 0;
  // False when some terminal set exhausted the budget; `value` is then an
  // upper bound only.
  bool exact = true;
  // A terminal set attaining the minimum, with a maximum packing for it.
  std::vector<int> witness_terminals;
  TreePacking witness;
  int64_t nodes = 0;
  int sets_examined = 0;
};

// kappa_k(G). Disconnected graphs give 0 and connected graphs with fewer
// than k vertices give 1. Throws std::invalid_argument on k < 2 or the
// empty graph.
ConnectivityResult GeneralizedConnectivity(const Graph& graph, int k,
                                           const SearchOptions& options = {});

inline ConnectivityResult Kappa3(const Graph& graph,
                                 const SearchOptions& options = {}) {
  return GeneralizedConnectivity(graph, 3, options);
}

}  // namespace gconn

#endif  // GCONN_STEINER_H_
