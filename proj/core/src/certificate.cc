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

#include "gconn/certificate.h"

#include <charconv>

#include "json.hpp"

namespace gconn {

namespace {

using nlohmann::ordered_json;

std::string KindName(const std::optional<ProductKind>& kind) {
  return kind ? std::string(ProductKindName(*kind)) : "none";
}

std::optional<ProductKind> ParseKind(const std::string& name) {
  if (name == "none") return std::nullopt;
  if (name == ProductKindName(ProductKind::kLexicographic)) {
    return ProductKind::kLexicographic;
  }
  if (name == ProductKindName(ProductKind::kCartesian)) {
    return ProductKind::kCartesian;
  }
  throw InputError("unknown product kind '" + name + "'");
}

void RequireShape(const Certificate& cert) {
  const size_t want = cert.product_kind ? 2 : 1;
  if (cert.factors.size() != want) {
    throw InputError("certificate host needs " + std::to_string(want) +
                     " factor(s)");
  }
}

ordered_json ToJson(const Certificate& cert) {
  RequireShape(cert);
  ordered_json host;
  ordered_json factors = ordered_json::array();
  for (const FactorRecord& f : cert.factors) {
    ordered_json edges = ordered_json::array();
    for (const Edge& e : f.graph.edges()) edges.push_back({e.u, e.v});
    factors.push_back(
        {{"spec", f.spec}, {"order", f.graph.order()}, {"edges", edges}});
  }
  host["factors"] = factors;
  host["product_kind"] = KindName(cert.product_kind);

  ordered_json j;
  j["host"] = host;
  ordered_json terminals = ordered_json::array();
  for (int t : cert.terminals) terminals.push_back(VertexLabel(cert, t));
  j["terminals"] = terminals;
  ordered_json trees = ordered_json::array();
  for (size_t i = 0; i < cert.trees.size(); ++i) {
    ordered_json edges = ordered_json::array();
    for (const Edge& e : cert.trees[i].edges) {
      edges.push_back({VertexLabel(cert, e.u), VertexLabel(cert, e.v)});
    }
    ordered_json tree;
    tree["edges"] = edges;
    tree["provenance"] =
        i < cert.provenance.size() ? cert.provenance[i] : std::string();
    trees.push_back(tree);
  }
  j["trees"] = trees;
  ordered_json verdict;
  verdict["valid"] = cert.verdict.valid;
  verdict["message"] = cert.verdict.message;
  if (cert.verdict.first_tree >= 0) {
    verdict["first_tree"] = cert.verdict.first_tree;
  }
  if (cert.verdict.second_tree >= 0) {
    verdict["second_tree"] = cert.verdict.second_tree;
  }
  j["verdict"] = verdict;
  ordered_json stats = ordered_json::object();
  for (const auto& [key, value] : cert.stats) stats[key] = value;
  j["stats"] = stats;
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

int ParseVertex(const Certificate& cert, const std::optional<ProductGraph>& p,
                const std::string& label) {
  if (p) return p->Flatten(p->ParseLabel(label));
  int v = -1;
  const auto [end, ec] =
      std::from_chars(label.data(), label.data() + label.size(), v);
  if (ec != std::errc() || end != label.data() + label.size() || v < 0 ||
      v >= cert.factors[0].graph.order()) {
    throw InputError("bad vertex label '" + label + "'");
  }
  return v;
}

Certificate FromJson(const ordered_json& j) {
  Certificate cert;
  const auto& host = j.at("host");
  cert.product_kind = ParseKind(host.at("product_kind").get<std::string>());
  for (const auto& f : host.at("factors")) {
    std::vector<Edge> edges;
    for (const auto& e : f.at("edges")) {
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    cert.factors.push_back(
        {f.at("spec").get<std::string>(),
         Graph::FromEdges(f.at("order").get<int>(), edges)});
  }
  RequireShape(cert);
  std::optional<ProductGraph> product;
  if (cert.product_kind) {
    product = MakeProduct(*cert.product_kind, cert.factors[0].graph,
                          cert.factors[1].graph);
  }
  for (const auto& t : j.at("terminals")) {
    cert.terminals.push_back(ParseVertex(cert, product, t.get<std::string>()));
  }
  for (const auto& tree : j.at("trees")) {
    std::vector<Edge> edges;
    for (const auto& e : tree.at("edges")) {
      edges.emplace_back(
          ParseVertex(cert, product, e.at(0).get<std::string>()),
          ParseVertex(cert, product, e.at(1).get<std::string>()));
    }
    cert.trees.push_back(MakeSteinerTree(cert.terminals, edges));
    cert.provenance.push_back(tree.value("provenance", std::string()));
  }
  if (j.contains("verdict")) {
    const auto& v = j.at("verdict");
    cert.verdict.valid = v.value("valid", false);
    cert.verdict.message = v.value("message", std::string());
    cert.verdict.first_tree = v.value("first_tree", -1);
    cert.verdict.second_tree = v.value("second_tree", -1);
  }
  if (j.contains("stats")) {
    for (const auto& [key, value] : j.at("stats").items()) {
      if (value.is_number_integer()) {
        cert.stats.emplace_back(key, value.get<int64_t>());
      }
    }
  }
  cert.note = j.value("note", std::string());
  return cert;
}

}  // namespace

Graph HostGraph(const Certificate& cert) {
  RequireShape(cert);
  if (!cert.product_kind) return cert.factors[0].graph;
  return MakeProduct(*cert.product_kind, cert.factors[0].graph,
                     cert.factors[1].graph)
      .graph();
}

std::string VertexLabel(const Certificate& cert, int v) {
  if (!cert.product_kind) return std::to_string(v);
  const int m = cert.factors[1].graph.order();
  return std::to_string(v / m) + ":" + std::to_string(v % m);
}

std::string CertificateJson(const Certificate& cert, int indent) {
  return ToJson(cert).dump(indent);
}

std::string CertificatesJson(const std::vector<Certificate>& certs,
                             int indent) {
  ordered_json list = ordered_json::array();
  for (const Certificate& c : certs) list.push_back(ToJson(c));
  ordered_json j;
  j["certificates"] = list;
  return j.dump(indent);
}

std::vector<Certificate> LoadCertificates(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    std::vector<Certificate> out;
    if (j.contains("certificates")) {
      for (const auto& c : j.at("certificates")) out.push_back(FromJson(c));
    } else {
      out.push_back(FromJson(j));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

PackingVerdict Reverify(const Certificate& cert) {
  for (size_t i = 0; i < cert.factors.size(); ++i) {
    std::optional<Graph> expected;
    try {
      expected = ParseFamilySpec(cert.factors[i].spec);
    } catch (const InputError&) {
      // Free-form description; the stored edges are authoritative.
    }
    if (expected && !(*expected == cert.factors[i].graph)) {
      return {false,
              "factor " + std::to_string(i) + " does not match its spec '" +
                  cert.factors[i].spec + "'",
              -1, -1};
    }
  }
  const Graph host = HostGraph(cert);
  return VerifyPacking(host, cert.terminals, cert.trees,
                       [&cert](int v) { return VertexLabel(cert, v); });
}

}  // namespace gconn
