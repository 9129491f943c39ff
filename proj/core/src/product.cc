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

#include "gconn/product.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace gconn {

std::string_view ProductKindName(ProductKind kind) {
  return kind == ProductKind::kLexicographic ? "lexicographic" : "cartesian";
}

std::string ProductGraph::Label(int flat) const {
  const ProdVertex p = Unflatten(flat);
  return std::to_string(p.g) + ":" + std::to_string(p.h);
}

ProdVertex ProductGraph::ParseLabel(std::string_view label) const {
  const size_t colon = label.find(':');
  auto parse = [&](std::string_view token) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw InputError("malformed product vertex '" + std::string(label) +
                       "', expected g:h");
    }
    return value;
  };
  if (colon == std::string_view::npos) {
    throw InputError("malformed product vertex '" + std::string(label) +
                     "', expected g:h");
  }
  const ProdVertex p{parse(label.substr(0, colon)),
                     parse(label.substr(colon + 1))};
  if (!Contains(p)) {
    throw InputError("product vertex '" + std::string(label) +
                     "' is out of range");
  }
  return p;
}

namespace {

void RequireNonEmpty(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty()) {
    throw std::invalid_argument("product factors must be nonempty");
  }
}

}  // namespace

ProductGraph LexicographicProduct(const Graph& g, const Graph& h) {
  RequireNonEmpty(g, h);
  const int n = g.order();
  const int m = h.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(g.size()) * m * m +
                static_cast<size_t>(n) * h.size());
  for (int u = 0; u < n; ++u) {
    for (const Edge& e : h.edges()) edges.emplace_back(u * m + e.u, u * m + e.v);
  }
  for (const Edge& e : g.edges()) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) edges.emplace_back(e.u * m + a, e.v * m + b);
    }
  }
  return ProductGraph(ProductKind::kLexicographic, g, h,
                      Graph::FromEdges(n * m, edges));
}

ProductGraph CartesianProduct(const Graph& g, const Graph& h) {
  RequireNonEmpty(g, h);
  const int n = g.order();
  const int m = h.order();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (const Edge& e : h.edges()) edges.emplace_back(u * m + e.u, u * m + e.v);
  }
  for (const Edge& e : g.edges()) {
    for (int a = 0; a < m; ++a) edges.emplace_back(e.u * m + a, e.v * m + a);
  }
  return ProductGraph(ProductKind::kCartesian, g, h,
                      Graph::FromEdges(n * m, edges));
}

ProductGraph MakeProduct(ProductKind kind, const Graph& g, const Graph& h) {
  return kind == ProductKind::kLexicographic ? LexicographicProduct(g, h)
                                             : CartesianProduct(g, h);
}

Fiber GetFiber(const ProductGraph& product, FiberKind kind, int base) {
  const bool over_first = kind == FiberKind::kSecondFactorCopy;
  const int base_order =
      over_first ? product.first_order() : product.second_order();
  if (base < 0 || base >= base_order) {
    throw std::out_of_range("fiber base " + std::to_string(base) +
                            " out of range");
  }
  Fiber fiber{kind, base, {}, {}};
  const int count = over_first ? product.second_order() : product.first_order();
  for (int i = 0; i < count; ++i) {
    fiber.members.push_back(over_first ? ProdVertex{base, i}
                                       : ProdVertex{i, base});
  }
  std::vector<Edge> edges;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (product.graph().adjacent(product.Flatten(fiber.members[i]),
                                   product.Flatten(fiber.members[j]))) {
        edges.emplace_back(i, j);
      }
    }
  }
  fiber.induced = Graph::FromEdges(count, edges);
  return fiber;
}

std::vector<int> LiftVertexSet(const ProductGraph& product,
                               const std::vector<int>& g_vertices) {
  std::vector<int> out;
  for (int g : g_vertices) {
    for (int h = 0; h < product.second_order(); ++h) {
      out.push_back(product.Flatten({g, h}));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gconn
