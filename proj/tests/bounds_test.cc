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

#include "gconn/bounds.h"
#include "gconn/connectivity.h"
#include "gconn/graph.h"
#include "gconn/product.h"
#include "gconn/random_graphs.h"
#include "gconn/steiner.h"
#include "json.hpp"

namespace gconn {
namespace {

Graph P(int n) { return Family(FamilyKind::kPath, n); }
Graph C(int n) { return Family(FamilyKind::kCycle, n); }
Graph K(int n) { return Family(FamilyKind::kComplete, n); }

FactorStats S(const Graph& g) { return ComputeFactorStats(g); }

const BoundCheck* Find(const BoundReport& report, const std::string& name) {
  for (const BoundCheck& c : report.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(FormulaTest, CompleteGraphs) {
  EXPECT_EQ(KappaKComplete(6, 3), 4);
  EXPECT_EQ(KappaKComplete(4, 3), 2);
  EXPECT_EQ(KappaKComplete(4, 3), Kappa3(K(4)).value);
  EXPECT_EQ(KappaKComplete(2, 2), 1);
  EXPECT_EQ(KappaKComplete(2, 2), VertexConnectivity(K(2)));
  EXPECT_THROW(KappaKComplete(3, 4), std::invalid_argument);
  EXPECT_THROW(KappaKComplete(3, 1), std::invalid_argument);
}

TEST(FormulaTest, FloorFromKappa) {
  EXPECT_EQ(Kappa3LowerFromKappa(1), 1);
  EXPECT_EQ(Kappa3LowerFromKappa(7), 5);
  EXPECT_EQ(Kappa3LowerFromKappa(4), 3);
  for (int kappa = 0; kappa <= 200; ++kappa) {
    EXPECT_LE(Kappa3LowerFromKappa(kappa), kappa);
    const FourSplit split = SplitByFour(kappa);
    EXPECT_EQ(4 * split.s + split.r, kappa);
    EXPECT_GE(split.r, 0);
    EXPECT_LE(split.r, 3);
  }
}

TEST(FormulaTest, CeilingFromKappa3) {
  // floor(4/3 * k3 + r - 4/3 * ceil(r/2)) in exact arithmetic.
  EXPECT_EQ(KappaCeilingFromKappa3(1, 1), 1);
  EXPECT_EQ(KappaCeilingFromKappa3(2, 3), 3);
  EXPECT_EQ(KappaCeilingFromKappa3(3, 4), 4);
  EXPECT_EQ(KappaCeilingFromKappa3(5, 7), 7);
  for (int kappa = 1; kappa <= 60; ++kappa) {
    // The floor from kappa never exceeds what the ceiling allows.
    EXPECT_GE(KappaCeilingFromKappa3(Kappa3LowerFromKappa(kappa), kappa),
              kappa);
  }
}

TEST(FormulaTest, CartesianKappa) {
  EXPECT_EQ(CartesianKappaFormula(S(P(3)), S(P(3))), 2);
  EXPECT_EQ(CartesianKappaFormula(S(K(3)), S(K(3))), 4);
  EXPECT_EQ(CartesianKappaFormula(S(P(4)), S(K(2))), 2);
  EXPECT_EQ(VertexConnectivity(CartesianProduct(P(4), K(2)).graph()), 2);
  EXPECT_THROW(CartesianKappaFormula(S(Graph(1)), S(P(3))),
               std::invalid_argument);
}

TEST(FormulaTest, CartesianKappa3Upper) {
  EXPECT_EQ(CartesianKappa3Upper(S(P(3)), S(P(3))), 2);
  EXPECT_EQ(CartesianKappa3Upper(S(K(4)), S(K(4))), 6);
}

TEST(FormulaTest, CartesianKappa3Lower) {
  EXPECT_EQ(CartesianKappa3Lower(S(P(3)), S(P(3))), 1);
  // kappa_3(K4) = 2 < kappa(K4) = 3, so the stronger form applies.
  EXPECT_EQ(CartesianKappa3Lower(S(K(4)), S(K(4))), 4);
}

TEST(FormulaTest, LexUpper) {
  for (int n = 4; n <= 6; ++n) {
    EXPECT_EQ(LexKappa3Upper(S(P(n)), S(P(3))), 3);
  }
  const auto c4 = LexKappa3Upper(S(C(4)), S(K(2)));
  ASSERT_TRUE(c4.has_value());
  EXPECT_GE(*c4, Kappa3(LexicographicProduct(C(4), K(2)).graph()).value);
  EXPECT_FALSE(LexKappa3Upper(S(K(4)), S(P(3))).has_value());
  EXPECT_FALSE(LexKappa3Upper(S(Graph(1)), S(P(3))).has_value());
}

TEST(FormulaTest, LexLower) {
  EXPECT_EQ(LexKappa3Lower(S(P(4)), S(P(3))), 3);
  for (int n = 3; n <= 5; ++n) {
    for (int m = 2; m <= 3; ++m) {
      EXPECT_EQ(LexKappa3Lower(S(P(n)), S(K(m))), m);
      EXPECT_EQ(VertexConnectivity(LexicographicProduct(P(n), K(m)).graph()),
                m);
    }
  }
  EXPECT_EQ(LexKappa3Lower(S(K(2)), S(K(2))), 2);
  EXPECT_EQ(Kappa3(LexicographicProduct(K(2), K(2)).graph()).value, 2);
  EXPECT_FALSE(LexKappa3Lower(S(Graph(1)), S(P(3))).has_value());
}

TEST(ConsistencyReportTest, PathByPath) {
  const BoundReport r = ConsistencyReport(P(4), P(3), "path:4", "path:3");
  EXPECT_TRUE(r.AllPassed());
  EXPECT_EQ(r.lex_kappa3, 3);
  EXPECT_EQ(r.lex_kappa3_lower, 3);
  EXPECT_EQ(r.lex_kappa3_upper, 3);
  EXPECT_EQ(r.lex_kappa, 3);
}

TEST(ConsistencyReportTest, StarByPath) {
  const BoundReport r =
      ConsistencyReport(Family(FamilyKind::kStar, 4), P(3), "star:4", "path:3");
  EXPECT_TRUE(r.AllPassed());
  EXPECT_EQ(r.lex_kappa3_lower, 3);
  EXPECT_EQ(r.lex_kappa3, 3);
}

TEST(ConsistencyReportTest, GridCartesianChecks) {
  const BoundReport r = ConsistencyReport(P(3), P(3), "path:3", "path:3");
  EXPECT_TRUE(r.AllPassed());
  EXPECT_EQ(r.cartesian_kappa, 2);
  EXPECT_EQ(r.cartesian_kappa_formula, 2);
  EXPECT_EQ(r.cartesian_kappa3_lower, 1);
  EXPECT_EQ(r.cartesian_kappa3_upper, 2);
  // Exact value; see MaxTreePackingTest.GridCornersAdmitOnlyOneTree.
  EXPECT_EQ(r.cartesian_kappa3, 1);
  const BoundCheck* sum = Find(r, "cartesian.kappa_ge_sum");
  ASSERT_NE(sum, nullptr);
  EXPECT_EQ(sum->verdict, Verdict::kPass);
  EXPECT_EQ(sum->bound, 2);
}

TEST(ConsistencyReportTest, CompleteFirstFactorSkipsLexUpper) {
  const BoundReport r = ConsistencyReport(K(4), P(3), "complete:4", "path:3");
  const BoundCheck* upper = Find(r, "lex.kappa3_upper");
  ASSERT_NE(upper, nullptr);
  EXPECT_EQ(upper->verdict, Verdict::kSkipped);
  EXPECT_EQ(upper->detail.rfind("skipped: hypothesis", 0), 0u);
  EXPECT_TRUE(r.AllPassed());
}

TEST(ConsistencyReportTest, ProductCapMarksChecksNotEvaluated) {
  ReportOptions options;
  options.product_cap = 16;
  const BoundReport r = ConsistencyReport(P(5), P(4), "a", "b", options);
  EXPECT_FALSE(r.cartesian_kappa3.has_value());
  EXPECT_FALSE(r.lex_kappa3.has_value());
  const BoundCheck* lower = Find(r, "cartesian.kappa3_lower");
  ASSERT_NE(lower, nullptr);
  EXPECT_EQ(lower->verdict, Verdict::kNotEvaluated);
  EXPECT_GT(r.Count(Verdict::kNotEvaluated), 0);
}

TEST(ConsistencyReportTest, SmallRandomSweepPasses) {
  int index = 0;
  for (const auto& [g, h] : RandomFactorPairs(3, 8, 4)) {
    const BoundReport r = ConsistencyReport(g, h, "g", "h");
    EXPECT_TRUE(r.AllPassed()) << ReportJson(r);
    EXPECT_EQ(r.cartesian_kappa_formula, r.cartesian_kappa);
    EXPECT_EQ(r.lex_kappa, r.first.kappa * h.order());
    ++index;
  }
  EXPECT_EQ(index, 8);
}

TEST(ConsistencyReportTest, SerializationIsStable) {
  const BoundReport a = ConsistencyReport(C(4), K(2), "cycle:4", "complete:2");
  const BoundReport b = ConsistencyReport(C(4), K(2), "cycle:4", "complete:2");
  EXPECT_EQ(ReportCsvRow(0, a), ReportCsvRow(0, b));
  EXPECT_EQ(ReportJson(a), ReportJson(b));
  const auto columns = [](const std::string& line) {
    return std::count(line.begin(), line.end(), ',');
  };
  EXPECT_EQ(columns(ReportCsvHeader()), columns(ReportCsvRow(0, a)));
  const auto j = nlohmann::json::parse(ReportJson(a));
  EXPECT_EQ(j.at("summary").at("failed").get<int>(), 0);
  EXPECT_TRUE(j.at("checks").is_array());
}

}  // namespace
}  // namespace gconn
