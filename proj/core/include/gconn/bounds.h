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

// Closed-form bounds on kappa and kappa_3 of graphs and of their Cartesian
// and lexicographic products, and a report that checks them against exact
// values. All arithmetic is integer.

#ifndef GCONN_BOUNDS_H_
#define GCONN_BOUNDS_H_

#include <optional>
#include <string>
#include <vector>

#include "gconn/graph.h"
#include "gconn/steiner.h"

namespace gconn {

// kappa_k(K_n) = n - ceil(k/2). Throws std::invalid_argument unless
// 2 <= k <= n.
int KappaKComplete(int n, int k);

// kappa = 4s + r with r in {0,1,2,3}.
struct FourSplit {
  int s = 0;
  int r = 0;
};
FourSplit SplitByFour(int kappa);

// 3s + ceil(r/2) for kappa = 4s + r: a lower bound on kappa_3 in terms of
// kappa.
int Kappa3LowerFromKappa(int kappa);

// floor(4/3 kappa3 + r - 4/3 ceil(r/2)) with r = kappa mod 4: the largest
// kappa compatible with the lower bound above.
int KappaCeilingFromKappa3(int kappa3, int kappa);

struct FactorStats {
  int order = 0;
  int size = 0;
  bool connected = false;
  bool complete = false;
  int kappa = 0;
  int delta = 0;
  int kappa3 = 0;
  bool kappa3_exact = false;  // false if the search ran out or was skipped
  bool adjacent_min_degree_pair = false;
};

FactorStats ComputeFactorStats(const Graph& graph,
                               const SearchOptions& search = {});

// min{kappa(G)|V(H)|, kappa(H)|V(G)|, delta(G) + delta(H)}; both factors
// nontrivial.
int CartesianKappaFormula(const FactorStats& g, const FactorStats& h);

// Upper bound on kappa_3(G box H) for connected factors.
int CartesianKappa3Upper(const FactorStats& g, const FactorStats& h);

// Lower bound on kappa_3(G box H), taking the factor order that the bound
// requires (larger kappa_3 first); when both orders qualify the stronger
// value is returned.
int CartesianKappa3Lower(const FactorStats& g, const FactorStats& h);

// Upper bound on kappa_3(G o H); nullopt when G is trivial or complete.
std::optional<int> LexKappa3Upper(const FactorStats& g, const FactorStats& h);

// kappa_3(G) * |V(H)|; nullopt when G is trivial (G o H is then H).
std::optional<int> LexKappa3Lower(const FactorStats& g, const FactorStats& h);

enum class Verdict { kPass, kFail, kSkipped, kNotEvaluated };

std::string VerdictName(Verdict v);

struct BoundCheck {
  std::string name;
  std::string relation;  // "<=", ">=" or "=="
  Verdict verdict = Verdict::kNotEvaluated;
  std::optional<int> bound;
  std::optional<int> measured;
  std::string detail;
};

struct ReportOptions {
  // Exact kappa_3 of a product is computed only up to this many vertices.
  int product_cap = 16;
  SearchOptions search;
};

struct BoundReport {
  std::string first_name;
  std::string second_name;
  FactorStats first;
  FactorStats second;
  FourSplit first_split;
  FourSplit second_split;

  int cartesian_order = 0;
  int cartesian_kappa = 0;
  int lex_kappa = 0;
  std::optional<int> cartesian_kappa3;
  std::optional<int> lex_kappa3;

  std::optional<int> cartesian_kappa_formula;
  std::optional<int> cartesian_kappa3_lower;
  std::optional<int> cartesian_kappa3_upper;
  std::optional<int> lex_kappa3_lower;
  std::optional<int> lex_kappa3_upper;

  std::vector<BoundCheck> checks;
  bool budget_exhausted = false;

  int Count(Verdict v) const;
  bool AllPassed() const { return Count(Verdict::kFail) == 0; }
};

// Evaluates every applicable bound for the pair and compares it with
// measured kappa and exact kappa_3 values. Checks whose hypotheses fail are
// marked skipped; checks needing a product kappa_3 above the cap are marked
// not evaluated.
BoundReport ConsistencyReport(const Graph& g, const Graph& h,
                              const std::string& first_name,
                              const std::string& second_name,
                              const ReportOptions& options = {});

// Fixed CSV layout, one row per report.
std::string ReportCsvHeader();
std::string ReportCsvRow(int index, const BoundReport& report);

// Structured form of one report as a JSON object.
std::string ReportJson(const BoundReport& report, int indent = 2);

}  // namespace gconn

#endif  // GCONN_BOUNDS_H_
