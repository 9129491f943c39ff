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

#include <gtest/gtest.h>

#include "gconn/certificate.h"
#include "gconn/graph.h"
#include "gconn/lex_construct.h"
#include "gconn/product.h"
#include "gconn/steiner.h"
#include "json.hpp"

namespace gconn {
namespace {

Certificate StarCertificate() {
  const Graph g = ParseFamilySpec("star:4");
  const Graph h = ParseFamilySpec("path:3");
  const ProductGraph p = LexicographicProduct(g, h);
  const LexFamily family =
      ConstructTreeLex(p, ParseTriple(p, "1:0 2:0 3:0"));
  Certificate cert;
  cert.factors = {{"star:4", g}, {"path:3", h}};
  cert.product_kind = ProductKind::kLexicographic;
  cert.terminals = family.terminals;
  cert.trees = family.trees;
  cert.provenance = family.provenance;
  cert.verdict = family.verdict;
  cert.stats = {{"trees", family.size()}};
  return cert;
}

TEST(CertificateTest, RoundTripIsByteIdentical) {
  const Certificate cert = StarCertificate();
  const std::string text = CertificateJson(cert);
  const std::vector<Certificate> loaded = LoadCertificates(text);
  ASSERT_EQ(loaded.size(), 1u);
  EXPECT_EQ(CertificateJson(loaded[0]), text);
  EXPECT_TRUE(Reverify(loaded[0]).valid);
  EXPECT_EQ(loaded[0].trees.size(), 3u);
}

TEST(CertificateTest, SchemaFields) {
  const auto j = nlohmann::json::parse(CertificateJson(StarCertificate()));
  EXPECT_EQ(j.at("host").at("product_kind"), "lexicographic");
  EXPECT_EQ(j.at("host").at("factors").size(), 2u);
  EXPECT_EQ(j.at("terminals"), nlohmann::json({"1:0", "2:0", "3:0"}));
  EXPECT_EQ(j.at("trees").at(0).at("provenance"), "tripod-lane");
  EXPECT_TRUE(j.at("verdict").at("valid").get<bool>());
  EXPECT_EQ(j.at("stats").at("trees"), 3);
}

TEST(CertificateTest, ListForm) {
  const Certificate cert = StarCertificate();
  const auto loaded = LoadCertificates(CertificatesJson({cert, cert}));
  EXPECT_EQ(loaded.size(), 2u);
}

TEST(CertificateTest, DeletedEdgeIsNotATree) {
  auto j = nlohmann::json::parse(CertificateJson(StarCertificate()));
  j["trees"][1]["edges"].erase(0);
  const Certificate cert = LoadCertificates(j.dump())[0];
  const PackingVerdict v = Reverify(cert);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.message, "tree 1 is not a tree");
}

TEST(CertificateTest, SharedInternalVertexNamesThePair) {
  auto j = nlohmann::json::parse(CertificateJson(StarCertificate()));
  // Re-route tree 2 through tree 0's hub.
  const std::string hub = j["trees"][0]["edges"][0][0];
  auto& edges = j["trees"][2]["edges"];
  const std::string old_hub = edges[0][0];
  for (auto& e : edges) {
    for (auto& end : e) {
      if (end == old_hub) end = hub;
    }
  }
  const PackingVerdict v = Reverify(LoadCertificates(j.dump())[0]);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.first_tree, 0);
  EXPECT_EQ(v.second_tree, 2);
  EXPECT_NE(v.message.find("trees 0 and 2 share"), std::string::npos)
      << v.message;
}

TEST(CertificateTest, FactorMustMatchSpec) {
  auto j = nlohmann::json::parse(CertificateJson(StarCertificate()));
  j["host"]["factors"][1]["spec"] = "complete:3";
  const PackingVerdict v = Reverify(LoadCertificates(j.dump())[0]);
  EXPECT_FALSE(v.valid);
  EXPECT_NE(v.message.find("does not match"), std::string::npos);
}

TEST(CertificateTest, EdgeOutsideHostIsRejected) {
  auto j = nlohmann::json::parse(CertificateJson(StarCertificate()));
  j["trees"][0]["edges"][0] = {"1:0", "2:0"};
  const PackingVerdict v = Reverify(LoadCertificates(j.dump())[0]);
  EXPECT_FALSE(v.valid);
  EXPECT_NE(v.message.find("is not an edge of the host graph"),
            std::string::npos);
}

TEST(CertificateTest, MalformedInput) {
  EXPECT_THROW(LoadCertificates("{"), InputError);
  EXPECT_THROW(LoadCertificates("{}"), InputError);
  auto j = nlohmann::json::parse(CertificateJson(StarCertificate()));
  j["terminals"][0] = "7:0";
  EXPECT_THROW(LoadCertificates(j.dump()), InputError);
  j = nlohmann::json::parse(CertificateJson(StarCertificate()));
  j["host"]["product_kind"] = "tensor";
  EXPECT_THROW(LoadCertificates(j.dump()), InputError);
}

TEST(CertificateTest, PlainGraph) {
  Certificate cert;
  cert.factors = {{"complete:4", ParseFamilySpec("complete:4")}};
  cert.terminals = {0, 1, 2};
  const TreePacking packing =
      MaxTreePacking(cert.factors[0].graph, cert.terminals);
  cert.trees = packing.trees;
  cert.provenance.assign(cert.trees.size(), "oracle");
  cert.verdict = Reverify(cert);
  EXPECT_TRUE(cert.verdict.valid);
  EXPECT_EQ(VertexLabel(cert, 2), "2");
  const auto loaded = LoadCertificates(CertificateJson(cert));
  EXPECT_EQ(CertificateJson(loaded[0]), CertificateJson(cert));
  EXPECT_EQ(HostGraph(loaded[0]), ParseFamilySpec("complete:4"));
}

}  // namespace
}  // namespace gconn
