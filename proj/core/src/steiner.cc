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

#include "gconn/steiner.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "flow_network.h"

namespace gconn {

namespace {

// Resource masks index non-terminals first, then terminal-terminal edges.
// The validity table has one entry per mask.
constexpr int kMaxResourceBits = 24;

std::vector<int> SortedTerminals(const Graph& graph,
                                 std::span<const int> terminals) {
  std::vector<int> sorted(terminals.begin(), terminals.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 2) {
    throw std::invalid_argument("a terminal set needs at least two vertices");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("terminal set has a repeated vertex");
  }
  for (int t : sorted) {
    if (!graph.contains(t)) {
      throw std::invalid_argument("terminal " + std::to_string(t) +
                                  " is not in the graph");
    }
  }
  return sorted;
}

// Vertices reachable from `start`.
std::vector<uint8_t> Reachable(const Graph& graph, int start) {
  std::vector<uint8_t> seen(graph.order(), 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : graph.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

struct Candidate {
  uint64_t mask = 0;
  std::vector<int> bits;  // set bit positions, ascending
  bool uses_terminal_edge = false;
};

class PackingProblem {
 public:
  PackingProblem(const Graph& graph, std::vector<int> terminals)
      : graph_(graph), terminals_(std::move(terminals)) {
    const auto seen = Reachable(graph_, terminals_[0]);
    connected_ = std::all_of(terminals_.begin(), terminals_.end(),
                             [&](int t) { return seen[t] != 0; });
    local_of_.assign(graph_.order(), -1);
    for (size_t i = 0; i < terminals_.size(); ++i) {
      local_of_[terminals_[i]] = static_cast<int>(i);
    }
    for (int v = 0; v < graph_.order(); ++v) {
      if (seen[v] && local_of_[v] == -1) {
        local_of_[v] = k() + static_cast<int>(non_terminals_.size());
        non_terminals_.push_back(v);
      }
    }
    for (int i = 0; i < k(); ++i) {
      for (int j = i + 1; j < k(); ++j) {
        if (graph_.adjacent(terminals_[i], terminals_[j])) {
          terminal_edges_.push_back({i, j});
        }
      }
    }
  }

  int k() const { return static_cast<int>(terminals_.size()); }
  bool connected() const { return connected_; }
  int nt_bits() const { return static_cast<int>(non_terminals_.size()); }
  int edge_bits() const { return static_cast<int>(terminal_edges_.size()); }
  int resource_bits() const { return nt_bits() + edge_bits(); }
  int candidate_count() const { return static_cast<int>(candidates_.size()); }

  void Enumerate() {
    if (enumerated_) return;
    enumerated_ = true;
    if (!connected_) return;
    const int locals = k() + nt_bits();
    if (resource_bits() > kMaxResourceBits || locals > 64) {
      throw std::invalid_argument(
          "terminal set too large for exact search: " +
          std::to_string(resource_bits()) + " resources");
    }
    // Local adjacency without terminal-terminal edges.
    adjacency_.assign(locals, 0);
    for (int a = 0; a < locals; ++a) {
      const int va = GlobalOf(a);
      for (int w : graph_.neighbors(va)) {
        const int b = local_of_[w];
        if (b < 0) continue;
        if (a < k() && b < k()) continue;
        adjacency_[a] |= uint64_t{1} << b;
      }
    }
    incident_edges_.assign(k(), {});
    for (int e = 0; e < edge_bits(); ++e) {
      incident_edges_[terminal_edges_[e].first].push_back(e);
      incident_edges_[terminal_edges_[e].second].push_back(e);
    }

    const uint64_t total = uint64_t{1} << resource_bits();
    std::vector<uint8_t> valid(total, 0);
    for (uint64_t mask = 0; mask < total; ++mask) valid[mask] = Connects(mask);
    for (uint64_t mask = 0; mask < total; ++mask) {
      if (!valid[mask]) continue;
      bool minimal = true;
      for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        if (valid[mask ^ (rest & -rest)]) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      Candidate c;
      c.mask = mask;
      for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        c.bits.push_back(std::countr_zero(rest));
      }
      c.uses_terminal_edge = (mask >> nt_bits()) != 0;
      candidates_.push_back(std::move(c));
    }
    std::sort(candidates_.begin(), candidates_.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.bits.size() != b.bits.size()) {
                  return a.bits.size() < b.bits.size();
                }
                return a.bits < b.bits;
              });
    containing_.assign(resource_bits(), {});
    for (int i = 0; i < candidate_count(); ++i) {
      for (int bit : candidates_[i].bits) containing_[bit].push_back(i);
    }
    at_terminal_.assign(k(), 0);
    for (int t = 0; t < k(); ++t) {
      for (int w : graph_.neighbors(terminals_[t])) {
        const int b = local_of_[w];
        if (b >= k()) at_terminal_[t] |= uint64_t{1} << (b - k());
      }
      for (int e : incident_edges_[t]) {
        at_terminal_[t] |= uint64_t{1} << (nt_bits() + e);
      }
    }
  }

  // Runs the branch and bound for `target` trees. Returns candidate indices.
  std::optional<std::vector<int>> Search(int target,
                                         const SearchOptions& options,
                                         int64_t* nodes, bool* exhausted) {
    Enumerate();
    chosen_.clear();
    nodes_ = 0;
    budget_ = options.budget;
    exhausted_ = false;
    max_edge_trees_ = options.max_terminal_edge_trees;
    bool found = target <= 0 || (connected_ && Dfs(0, 0, target, 0));
    *nodes += nodes_;
    if (exhausted_) *exhausted = true;
    if (!found) return std::nullopt;
    return chosen_;
  }

  SteinerTree BuildTree(int candidate) const {
    const uint64_t mask = candidates_[candidate].mask;
    const int locals = k() + nt_bits();
    uint64_t allowed = (uint64_t{1} << k()) - 1;
    allowed |= (mask & ((uint64_t{1} << nt_bits()) - 1)) << k();
    std::vector<Edge> edges;
    std::vector<uint8_t> seen(locals, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      std::vector<int> next;
      for (uint64_t nb = adjacency_[a] & allowed; nb; nb &= nb - 1) {
        next.push_back(std::countr_zero(nb));
      }
      if (a < k()) {
        for (int e : incident_edges_[a]) {
          if (mask >> (nt_bits() + e) & 1) {
            const auto [i, j] = terminal_edges_[e];
            next.push_back(i == a ? j : i);
          }
        }
      }
      std::sort(next.begin(), next.end(), [&](int x, int y) {
        return GlobalOf(x) < GlobalOf(y);
      });
      for (int b : next) {
        if (seen[b]) continue;
        seen[b] = 1;
        edges.emplace_back(GlobalOf(a), GlobalOf(b));
        queue.push_back(b);
      }
    }
    std::sort(edges.begin(), edges.end());
    return MakeSteinerTree(terminals_, edges);
  }

  const std::vector<int>& terminals() const { return terminals_; }

 private:
  int GlobalOf(int local) const {
    return local < k() ? terminals_[local] : non_terminals_[local - k()];
  }

  bool Connects(uint64_t mask) const {
    const uint64_t terminal_mask = (uint64_t{1} << k()) - 1;
    const uint64_t allowed =
        terminal_mask | (mask & ((uint64_t{1} << nt_bits()) - 1)) << k();
    uint64_t reached = 1;
    uint64_t frontier = 1;
    while (frontier) {
      const int a = std::countr_zero(frontier);
      frontier &= frontier - 1;
      uint64_t next = adjacency_[a] & allowed & ~reached;
      if (a < k()) {
        for (int e : incident_edges_[a]) {
          if (mask >> (nt_bits() + e) & 1) {
            const auto [i, j] = terminal_edges_[e];
            next |= uint64_t{1} << (i == a ? j : i);
          }
        }
        next &= ~reached;
      }
      reached |= next;
      frontier |= next;
    }
    return (reached & terminal_mask) == terminal_mask;
  }

  bool Dfs(uint64_t used, uint64_t excluded, int remaining, int edge_trees) {
    if (remaining == 0) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const uint64_t blocked = used | excluded;
    int pivot = -1;
    int pivot_slack = 0;
    for (int t = 0; t < k(); ++t) {
      const int slack = std::popcount(at_terminal_[t] & ~blocked) - remaining;
      if (slack < 0) return false;
      if (pivot == -1 || slack < pivot_slack) {
        pivot = t;
        pivot_slack = slack;
      }
    }
    const uint64_t nt_all = (uint64_t{1} << nt_bits()) - 1;
    const int free_nt = std::popcount(nt_all & ~blocked);
    const int free_edges = std::popcount((~nt_all) & ~blocked &
                                         ((uint64_t{1} << resource_bits()) - 1));
    const int edge_only_trees =
        std::min(free_edges / (k() - 1), max_edge_trees_ - edge_trees);
    if (free_nt + std::max(0, edge_only_trees) < remaining) return false;

    const uint64_t options = at_terminal_[pivot] & ~blocked;
    const uint64_t bit = options & -options;
    const int resource = std::countr_zero(bit);
    for (int c : containing_[resource]) {
      const Candidate& cand = candidates_[c];
      if (cand.mask & blocked) continue;
      if (cand.uses_terminal_edge && edge_trees >= max_edge_trees_) continue;
      chosen_.push_back(c);
      if (Dfs(used | cand.mask, excluded, remaining - 1,
              edge_trees + (cand.uses_terminal_edge ? 1 : 0))) {
        return true;
      }
      chosen_.pop_back();
      if (exhausted_) return false;
    }
    return Dfs(used, excluded | bit, remaining, edge_trees);
  }

  const Graph& graph_;
  std::vector<int> terminals_;
  bool connected_ = false;
  std::vector<int> local_of_;
  std::vector<int> non_terminals_;
  std::vector<std::pair<int, int>> terminal_edges_;

  bool enumerated_ = false;
  std::vector<uint64_t> adjacency_;
  std::vector<std::vector<int>> incident_edges_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<int>> containing_;
  std::vector<uint64_t> at_terminal_;

  std::vector<int> chosen_;
  int64_t nodes_ = 0;
  int64_t budget_ = 0;
  bool exhausted_ = false;
  int max_edge_trees_ = kUnbounded;
};

TreePacking Assemble(const Graph& graph, const PackingProblem& problem,
                     const std::vector<int>& chosen) {
  TreePacking packing;
  packing.terminals = problem.terminals();
  for (int c : chosen) packing.trees.push_back(problem.BuildTree(c));
  std::sort(packing.trees.begin(), packing.trees.end(),
            [](const SteinerTree& a, const SteinerTree& b) {
              return a.edges < b.edges;
            });
  packing.verified =
      VerifyPacking(graph, packing.terminals, packing.trees).valid;
  return packing;
}

int TerminalUpperBound(const Graph& graph, const std::vector<int>& terminals,
                       int cap) {
  int bound = cap;
  for (int t : terminals) bound = std::min(bound, graph.degree(t));
  const auto seen = Reachable(graph, terminals[0]);
  std::vector<uint8_t> is_terminal(graph.order(), 0);
  for (int t : terminals) is_terminal[t] = 1;
  int non_terminals = 0;
  for (int v = 0; v < graph.order(); ++v) {
    if (seen[v] && !is_terminal[v]) ++non_terminals;
  }
  int terminal_edges = 0;
  for (size_t i = 0; i < terminals.size(); ++i) {
    for (size_t j = i + 1; j < terminals.size(); ++j) {
      if (graph.adjacent(terminals[i], terminals[j])) ++terminal_edges;
    }
  }
  const int k = static_cast<int>(terminals.size());
  bound = std::min(bound, non_terminals + terminal_edges / (k - 1));

  std::vector<int> capacity(graph.order(), 1);
  for (int t : terminals) capacity[t] = internal::kInfiniteCapacity;
  for (size_t i = 0; i < terminals.size() && bound > 0; ++i) {
    for (size_t j = i + 1; j < terminals.size() && bound > 0; ++j) {
      internal::FlowNetwork network =
          internal::SplitNetwork(graph, capacity, 1);
      bound = std::min(bound, network.MaxFlow(internal::OutNode(terminals[i]),
                                              internal::InNode(terminals[j]),
                                              bound));
    }
  }
  return bound;
}

bool NextCombination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  int i = k - 1;
  while (i >= 0 && combo[i] == n - k + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

}  // namespace

SteinerTree MakeSteinerTree(std::span<const int> terminals,
                            std::span<const Edge> edges) {
  SteinerTree tree;
  tree.edges.assign(edges.begin(), edges.end());
  std::sort(tree.edges.begin(), tree.edges.end());
  tree.vertices.assign(terminals.begin(), terminals.end());
  for (const Edge& e : tree.edges) {
    tree.vertices.push_back(e.u);
    tree.vertices.push_back(e.v);
  }
  std::sort(tree.vertices.begin(), tree.vertices.end());
  tree.vertices.erase(std::unique(tree.vertices.begin(), tree.vertices.end()),
                      tree.vertices.end());
  return tree;
}

PackingVerdict VerifyPacking(const Graph& graph, std::span<const int> terminals,
                             std::span<const SteinerTree> trees,
                             const std::function<std::string(int)>& label) {
  auto name = [&](int v) { return label ? label(v) : std::to_string(v); };
  auto reject = [](std::string message, int a, int b = -1) {
    return PackingVerdict{false, std::move(message), a, b};
  };
  std::vector<int> sorted_terminals(terminals.begin(), terminals.end());
  std::sort(sorted_terminals.begin(), sorted_terminals.end());
  if (std::adjacent_find(sorted_terminals.begin(), sorted_terminals.end()) !=
      sorted_terminals.end()) {
    return reject("terminal set has a repeated vertex", -1);
  }
  for (int t : sorted_terminals) {
    if (!graph.contains(t)) return reject("terminal out of range", -1);
  }
  std::vector<uint8_t> is_terminal(graph.order(), 0);
  for (int t : sorted_terminals) is_terminal[t] = 1;

  for (size_t i = 0; i < trees.size(); ++i) {
    const SteinerTree& tree = trees[i];
    const std::string which = "tree " + std::to_string(i);
    const int index = static_cast<int>(i);
    for (int v : tree.vertices) {
      if (!graph.contains(v)) {
        return reject(which + " has a vertex outside the host graph", index);
      }
    }
    for (const Edge& e : tree.edges) {
      if (!graph.contains(e.u) || !graph.contains(e.v) ||
          !graph.adjacent(e.u, e.v)) {
        return reject(which + ": " + name(e.u) + "-" + name(e.v) +
                          " is not an edge of the host graph",
                      index);
      }
      if (!std::binary_search(tree.vertices.begin(), tree.vertices.end(),
                              e.u) ||
          !std::binary_search(tree.vertices.begin(), tree.vertices.end(),
                              e.v)) {
        return reject(which + ": edge endpoint missing from vertex set", index);
      }
    }
    std::vector<Edge> sorted_edges = tree.edges;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) !=
        sorted_edges.end()) {
      return reject(which + " repeats an edge", index);
    }
    // Connected with |E| = |V| - 1.
    bool is_tree = sorted_edges.size() + 1 == tree.vertices.size();
    if (is_tree) {
      std::vector<int> root(tree.vertices.size());
      for (size_t r = 0; r < root.size(); ++r) root[r] = static_cast<int>(r);
      auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
      };
      auto position = [&](int v) {
        return static_cast<int>(std::lower_bound(tree.vertices.begin(),
                                                 tree.vertices.end(), v) -
                                tree.vertices.begin());
      };
      for (const Edge& e : sorted_edges) {
        const int a = find(position(e.u));
        const int b = find(position(e.v));
        if (a == b) {
          is_tree = false;
          break;
        }
        root[a] = b;
      }
    }
    if (!is_tree) return reject(which + " is not a tree", index);
    for (int t : sorted_terminals) {
      if (!std::binary_search(tree.vertices.begin(), tree.vertices.end(), t)) {
        return reject(which + " does not contain terminal " + name(t), index);
      }
    }
  }

  for (size_t i = 0; i < trees.size(); ++i) {
    for (size_t j = i + 1; j < trees.size(); ++j) {
      const std::string pair =
          "trees " + std::to_string(i) + " and " + std::to_string(j);
      std::vector<Edge> a = trees[i].edges;
      std::vector<Edge> b = trees[j].edges;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::vector<Edge> shared_edges;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(shared_edges));
      if (!shared_edges.empty()) {
        const Edge& e = shared_edges.front();
        return reject(pair + " share edge " + name(e.u) + "-" + name(e.v),
                      static_cast<int>(i), static_cast<int>(j));
      }
      std::vector<int> shared;
      std::set_intersection(trees[i].vertices.begin(), trees[i].vertices.end(),
                            trees[j].vertices.begin(), trees[j].vertices.end(),
                            std::back_inserter(shared));
      for (int v : shared) {
        if (!is_terminal[v]) {
          return reject(pair + " share non-terminal vertex " + name(v),
                        static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
  }
  return {};
}

int PackingUpperBound(const Graph& graph, std::span<const int> terminals) {
  const std::vector<int> sorted = SortedTerminals(graph, terminals);
  const auto seen = Reachable(graph, sorted[0]);
  for (int t : sorted) {
    if (!seen[t]) return 0;
  }
  return TerminalUpperBound(graph, sorted, graph.order());
}

std::optional<TreePacking> FindTreePacking(const Graph& graph,
                                           std::span<const int> terminals,
                                           int target,
                                           const SearchOptions& options,
                                           bool* exhausted, int64_t* nodes) {
  PackingProblem problem(graph, SortedTerminals(graph, terminals));
  int64_t used_nodes = 0;
  bool ran_out = false;
  auto chosen = problem.Search(target, options, &used_nodes, &ran_out);
  if (exhausted) *exhausted = ran_out;
  if (nodes) *nodes = used_nodes;
  if (!chosen) return std::nullopt;
  TreePacking packing = Assemble(graph, problem, *chosen);
  packing.stats.nodes = used_nodes;
  packing.stats.candidates = problem.candidate_count();
  return packing;
}

TreePacking MaxTreePacking(const Graph& graph, std::span<const int> terminals,
                           const SearchOptions& options) {
  PackingProblem problem(graph, SortedTerminals(graph, terminals));
  if (!problem.connected()) {
    TreePacking empty;
    empty.terminals = problem.terminals();
    empty.verified = true;
    return empty;
  }
  const int bound =
      TerminalUpperBound(graph, problem.terminals(), graph.order());
  int64_t nodes = 0;
  bool exhausted = false;
  for (int target = bound; target >= 1; --target) {
    bool ran_out = false;
    auto chosen = problem.Search(target, options, &nodes, &ran_out);
    exhausted = exhausted || ran_out;
    if (chosen) {
      TreePacking packing = Assemble(graph, problem, *chosen);
      packing.optimal = !exhausted;
      packing.stats = {nodes, problem.candidate_count(), bound};
      return packing;
    }
  }
  TreePacking empty;
  empty.terminals = problem.terminals();
  empty.optimal = !exhausted;
  empty.verified = true;
  empty.stats = {nodes, problem.candidate_count(), bound};
  return empty;
}

ConnectivityResult GeneralizedConnectivity(const Graph& graph, int k,
                                           const SearchOptions& options) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (graph.empty()) throw std::invalid_argument("empty graph");
  ConnectivityResult result;
  result.k = k;
  if (!IsConnected(graph)) return result;
  const int n = graph.order();
  if (n < k) {
    result.value = 1;
    return result;
  }

  // Bound every set first; the tightest bound seeds the running minimum.
  std::vector<std::vector<int>> sets;
  std::vector<int> bounds;
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  do {
    sets.push_back(combo);
    bounds.push_back(TerminalUpperBound(graph, combo, n));
  } while (NextCombination(combo, n));
  const size_t seed = static_cast<size_t>(
      std::min_element(bounds.begin(), bounds.end()) - bounds.begin());
  int best = bounds[seed];

  std::vector<size_t> order{seed};
  for (size_t i = 0; i < sets.size(); ++i) {
    if (i != seed) order.push_back(i);
  }
  for (size_t i : order) {
    ++result.sets_examined;
    PackingProblem problem(graph, sets[i]);
    int64_t nodes = 0;
    bool exhausted = false;
    auto chosen = problem.Search(best, options, &nodes, &exhausted);
    result.nodes += nodes;
    if (chosen) {
      if (result.witness_terminals.empty()) {
        result.witness_terminals = sets[i];
        result.witness = Assemble(graph, problem, *chosen);
        result.witness.stats = {nodes, problem.candidate_count(), bounds[i]};
      }
    } else {
      if (exhausted) result.exact = false;
      // kappa(S) < best: descend until a packing appears.
      int target = best - 1;
      for (; target >= 1; --target) {
        bool ran_out = false;
        int64_t more = 0;
        chosen = problem.Search(target, options, &more, &ran_out);
        result.nodes += more;
        nodes += more;
        if (ran_out) result.exact = false;
        if (chosen) break;
      }
      best = std::max(target, 0);
      result.witness_terminals = sets[i];
      result.witness = Assemble(graph, problem,
                                chosen ? *chosen : std::vector<int>{});
      result.witness.optimal = result.exact;
      result.witness.stats = {nodes, problem.candidate_count(), bounds[i]};
    }
    // Connected graphs have kappa(S) >= 1 for every S.
    if (best <= 1) break;
  }
  result.value = best;
  return result;
}

}  // namespace gconn
