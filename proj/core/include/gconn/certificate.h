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

// JSON certificates for tree packings.
//
//   {"host": {"factors": [{"spec", "order", "edges": [[u, v], ...]}, ...],
//             "product_kind": "lexicographic" | "cartesian" | "none"},
//    "terminals": ["g:h", ...],
//    "trees": [{"edges": [["g:h", "g:h"], ...], "provenance": "..."}, ...],
//    "verdict": {"valid": bool, "message": "..."},
//    "stats": {...}}
//
// Plain graphs (product_kind "none", one factor) label vertices by their
// decimal id. Several certificates are written as {"certificates": [...]}.

#ifndef GCONN_CERTIFICATE_H_
#define GCONN_CERTIFICATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gconn/graph.h"
#include "gconn/product.h"
#include "gconn/steiner.h"

namespace gconn {

struct FactorRecord {
  std::string spec;  // family spec or a free-form description
  Graph graph;
};

struct Certificate {
  std::vector<FactorRecord> factors;
  std::optional<ProductKind> product_kind;  // none: a single plain graph
  std::vector<int> terminals;               // host vertex ids
  std::vector<SteinerTree> trees;
  std::vector<std::string> provenance;  // empty or one per tree
  PackingVerdict verdict;
  std::vector<std::pair<std::string, int64_t>> stats;
  std::string note;
};

// Host graph described by the factors. Throws InputError when the factor
// count does not match the product kind.
Graph HostGraph(const Certificate& cert);

std::string VertexLabel(const Certificate& cert, int v);

std::string CertificateJson(const Certificate& cert, int indent = 2);
std::string CertificatesJson(const std::vector<Certificate>& certs,
                             int indent = 2);

// Accepts a single certificate or the {"certificates": [...]} form. Throws
// InputError on malformed input.
std::vector<Certificate> LoadCertificates(const std::string& text);

// Re-checks a certificate from scratch: factor edges against their family
// spec when it names a family, then the packing on the rebuilt host.
PackingVerdict Reverify(const Certificate& cert);

}  // namespace gconn

#endif  // GCONN_CERTIFICATE_H_
