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

#ifndef GCONN_PRODUCT_H_
#define GCONN_PRODUCT_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gconn/graph.h"

namespace gconn {

// A vertex of a product graph addressed by its factor coordinates.
struct ProdVertex {
  int g = 0;  // vertex of the first factor
  int h = 0;  // vertex of the second factor

  auto operator<=>(const ProdVertex&) const = default;
};

enum class ProductKind { kLexicographic, kCartesian };

std::string_view ProductKindName(ProductKind kind);

// A product graph together with its factors. Vertex (g, h) is stored at flat
// index g * m + h where m is the order of the second factor.
class ProductGraph {
 public:
  ProductGraph(ProductKind kind, Graph first, Graph second, Graph graph)
      : kind_(kind),
        first_(std::move(first)),
        second_(std::move(second)),
        graph_(std::move(graph)) {}

  ProductKind kind() const { return kind_; }
  const Graph& first() const { return first_; }
  const Graph& second() const { return second_; }
  const Graph& graph() const { return graph_; }

  int first_order() const { return first_.order(); }
  int second_order() const { return second_.order(); }

  int Flatten(ProdVertex p) const { return p.g * second_.order() + p.h; }
  ProdVertex Unflatten(int flat) const {
    return {flat / second_.order(), flat % second_.order()};
  }
  bool Contains(ProdVertex p) const {
    return p.g >= 0 && p.g < first_.order() && p.h >= 0 &&
           p.h < second_.order();
  }

  // "g:h" label used in certificates and on the command line.
  std::string Label(int flat) const;
  // Parses "g:h"; throws InputError when malformed or out of range.
  ProdVertex ParseLabel(std::string_view label) const;

 private:
  ProductKind kind_;
  Graph first_;
  Graph second_;
  Graph graph_;
};

// (u,v) ~ (u',v') iff uu' is an edge of g, or u = u' and vv' is an edge of h.
ProductGraph LexicographicProduct(const Graph& g, const Graph& h);

// (u,v) ~ (u',v') iff (u = u' and vv' in E(h)) or (v = v' and uu' in E(g)).
ProductGraph CartesianProduct(const Graph& g, const Graph& h);

ProductGraph MakeProduct(ProductKind kind, const Graph& g, const Graph& h);

enum class FiberKind {
  kSecondFactorCopy,  // all (u, *) for a fixed first-factor vertex u
  kFirstFactorCopy,   // all (*, v) for a fixed second-factor vertex v
};

struct Fiber {
  FiberKind kind;
  int base = 0;
  std::vector<ProdVertex> members;  // ordered by the free coordinate
  Graph induced;                    // relabeled by the free coordinate
};

// Copy of one factor inside the product. Throws std::out_of_range if `base`
// is not a vertex of the relevant factor.
Fiber GetFiber(const ProductGraph& product, FiberKind kind, int base);

// Flat ids of every vertex whose first coordinate lies in `g_vertices`.
std::vector<int> LiftVertexSet(const ProductGraph& product,
                               const std::vector<int>& g_vertices);

}  // namespace gconn

#endif  // GCONN_PRODUCT_H_
