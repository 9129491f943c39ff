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

#include "gconn/bounds.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gconn/connectivity.h"
#include "gconn/product.h"
#include "json.hpp"

namespace gconn {

namespace {

int CeilHalf(int r) { return (r + 1) / 2; }

int FloorDiv(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool HasAdjacentMinDegreePair(const Graph& g, int delta) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == delta && g.degree(e.v) == delta) return true;
  }
  return false;
}

FactorStats Stats(const Graph& graph, const SearchOptions& search,
                  bool with_kappa3, bool* exhausted) {
  FactorStats st;
  st.order = graph.order();
  st.size = graph.size();
  st.connected = IsConnected(graph);
  st.complete = IsComplete(graph);
  st.kappa = VertexConnectivity(graph);
  st.delta = MinDegree(graph);
  st.adjacent_min_degree_pair = HasAdjacentMinDegreePair(graph, st.delta);
  if (with_kappa3) {
    try {
      const ConnectivityResult r = Kappa3(graph, search);
      st.kappa3 = r.value;
      st.kappa3_exact = r.exact;
      if (!r.exact && exhausted) *exhausted = true;
    } catch (const std::invalid_argument&) {
      st.kappa3_exact = false;
    }
  }
  return st;
}

class CheckList {
 public:
  explicit CheckList(std::vector<BoundCheck>* out) : out_(out) {}

  void Skip(std::string name, std::string relation, std::string why) {
    out_->push_back({std::move(name), std::move(relation), Verdict::kSkipped,
                     std::nullopt, std::nullopt, "skipped: " + why});
  }

  void Pending(std::string name, std::string relation,
               std::optional<int> bound, std::string why) {
    out_->push_back({std::move(name), std::move(relation),
                     Verdict::kNotEvaluated, bound, std::nullopt,
                     std::move(why)});
  }

  void Compare(std::string name, std::string relation, int measured,
               int bound) {
    bool ok = false;
    if (relation == "<=") ok = measured <= bound;
    if (relation == ">=") ok = measured >= bound;
    if (relation == "==") ok = measured == bound;
    out_->push_back({std::move(name), std::move(relation),
                     ok ? Verdict::kPass : Verdict::kFail, bound, measured,
                     ""});
  }

 private:
  std::vector<BoundCheck>* out_;
};

// kappa_3 checks that hold for any connected graph.
void GraphChecks(CheckList& list, const std::string& prefix,
                 const FactorStats& st, bool kappa3_known) {
  const std::string le = prefix + ".kappa3_le_kappa";
  const std::string adj = prefix + ".adjacent_min_degree_upper";
  const std::string flo = prefix + ".kappa3_floor_from_kappa";
  if (!st.connected) {
    list.Skip(le, "<=", "hypothesis (disconnected)");
    list.Skip(adj, "<=", "hypothesis (disconnected)");
    list.Skip(flo, ">=", "hypothesis (disconnected)");
    return;
  }
  const bool exact = kappa3_known && st.kappa3_exact;
  const std::string why = kappa3_known ? "kappa_3 search did not finish"
                                       : "product above the exact-search cap";
  if (st.order < 2) {
    list.Skip(le, "<=", "hypothesis (trivial graph)");
  } else if (exact) {
    list.Compare(le, "<=", st.kappa3, st.kappa);
  } else {
    list.Pending(le, "<=", st.kappa, why);
  }
  if (st.order < 3 || !st.adjacent_min_degree_pair) {
    list.Skip(adj, "<=", "hypothesis (no adjacent minimum-degree pair)");
  } else if (exact) {
    list.Compare(adj, "<=", st.kappa3, st.delta - 1);
  } else {
    list.Pending(adj, "<=", st.delta - 1, why);
  }
  if (exact) {
    list.Compare(flo, ">=", st.kappa3, Kappa3LowerFromKappa(st.kappa));
  } else {
    list.Pending(flo, ">=", Kappa3LowerFromKappa(st.kappa), why);
  }
}

std::string Field(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "";
}

}  // namespace

int KappaKComplete(int n, int k) {
  if (k < 2 || k > n) {
    throw std::invalid_argument("need 2 <= k <= n");
  }
  return n - CeilHalf(k);
}

FourSplit SplitByFour(int kappa) {
  if (kappa < 0) throw std::invalid_argument("negative connectivity");
  return {kappa / 4, kappa % 4};
}

int Kappa3LowerFromKappa(int kappa) {
  const FourSplit f = SplitByFour(kappa);
  return 3 * f.s + CeilHalf(f.r);
}

int KappaCeilingFromKappa3(int kappa3, int kappa) {
  const int r = SplitByFour(kappa).r;
  return FloorDiv(4 * kappa3 + 3 * r - 4 * CeilHalf(r), 3);
}

FactorStats ComputeFactorStats(const Graph& graph,
                               const SearchOptions& search) {
  return Stats(graph, search, true, nullptr);
}

int CartesianKappaFormula(const FactorStats& g, const FactorStats& h) {
  if (g.order < 2 || h.order < 2) {
    throw std::invalid_argument("both factors must be nontrivial");
  }
  return std::min({g.kappa * h.order, h.kappa * g.order, g.delta + h.delta});
}

int CartesianKappa3Upper(const FactorStats& g, const FactorStats& h) {
  return std::min({KappaCeilingFromKappa3(g.kappa3, g.kappa) * h.order,
                   KappaCeilingFromKappa3(h.kappa3, h.kappa) * g.order,
                   g.delta + h.delta});
}

int CartesianKappa3Lower(const FactorStats& g, const FactorStats& h) {
  auto bound = [](const FactorStats& a, const FactorStats& b) {
    return a.kappa == a.kappa3 ? a.kappa3 + b.kappa3 - 1 : a.kappa3 + b.kappa3;
  };
  int best = 0;
  if (g.kappa3 >= h.kappa3) best = std::max(best, bound(g, h));
  if (h.kappa3 >= g.kappa3) best = std::max(best, bound(h, g));
  return best;
}

std::optional<int> LexKappa3Upper(const FactorStats& g, const FactorStats& h) {
  if (g.order < 2 || g.complete) return std::nullopt;
  return KappaCeilingFromKappa3(g.kappa3, g.kappa) * h.order;
}

std::optional<int> LexKappa3Lower(const FactorStats& g, const FactorStats& h) {
  if (g.order < 2) return std::nullopt;
  return g.kappa3 * h.order;
}

std::string VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
    case Verdict::kNotEvaluated:
      return "not evaluated";
  }
  return "";
}

int BoundReport::Count(Verdict v) const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [v](const BoundCheck& c) { return c.verdict == v; }));
}

BoundReport ConsistencyReport(const Graph& g, const Graph& h,
                              const std::string& first_name,
                              const std::string& second_name,
                              const ReportOptions& options) {
  if (g.empty() || h.empty()) throw std::invalid_argument("empty factor");
  BoundReport report;
  report.first_name = first_name;
  report.second_name = second_name;
  bool exhausted = false;
  report.first = Stats(g, options.search, true, &exhausted);
  report.second = Stats(h, options.search, true, &exhausted);
  report.first_split = SplitByFour(report.first.kappa);
  report.second_split = SplitByFour(report.second.kappa);
  const FactorStats& fg = report.first;
  const FactorStats& fh = report.second;
  const bool both_connected = fg.connected && fh.connected;
  const bool factors_exact = fg.kappa3_exact && fh.kappa3_exact;

  const ProductGraph cart = CartesianProduct(g, h);
  const ProductGraph lex = LexicographicProduct(g, h);
  report.cartesian_order = cart.graph().order();
  const bool oracle = report.cartesian_order <= options.product_cap;
  const FactorStats cs = Stats(cart.graph(), options.search, oracle, &exhausted);
  const FactorStats ls = Stats(lex.graph(), options.search, oracle, &exhausted);
  report.cartesian_kappa = cs.kappa;
  report.lex_kappa = ls.kappa;
  if (oracle && cs.kappa3_exact) report.cartesian_kappa3 = cs.kappa3;
  if (oracle && ls.kappa3_exact) report.lex_kappa3 = ls.kappa3;

  if (fg.order >= 2 && fh.order >= 2) {
    report.cartesian_kappa_formula = CartesianKappaFormula(fg, fh);
  }
  if (both_connected && factors_exact) {
    if (fg.order >= 2 && fh.order >= 2) {
      report.cartesian_kappa3_lower = CartesianKappa3Lower(fg, fh);
    }
    report.cartesian_kappa3_upper = CartesianKappa3Upper(fg, fh);
    report.lex_kappa3_lower = LexKappa3Lower(fg, fh);
    report.lex_kappa3_upper = LexKappa3Upper(fg, fh);
  }

  CheckList list(&report.checks);
  GraphChecks(list, "first", fg, true);
  GraphChecks(list, "second", fh, true);
  GraphChecks(list, "cartesian", cs, oracle);
  GraphChecks(list, "lex", ls, oracle);

  const std::string cap_note = "product above the exact-search cap";
  auto against = [&](const std::string& name, const std::string& rel,
                     const std::optional<int>& measured,
                     const std::optional<int>& bound, const char* skip_why) {
    if (!bound) {
      list.Skip(name, rel, std::string("hypothesis (") + skip_why + ")");
    } else if (!measured) {
      list.Pending(name, rel, bound,
                   oracle ? "kappa_3 search did not finish" : cap_note);
    } else {
      list.Compare(name, rel, *measured, *bound);
    }
  };

  if (both_connected) {
    list.Compare("cartesian.kappa_ge_sum", ">=", cs.kappa,
                 fg.kappa + fh.kappa);
  } else {
    list.Skip("cartesian.kappa_ge_sum", ">=", "hypothesis (disconnected)");
  }
  if (report.cartesian_kappa_formula) {
    list.Compare("cartesian.kappa_formula", "==", cs.kappa,
                 *report.cartesian_kappa_formula);
  } else {
    list.Skip("cartesian.kappa_formula", "==", "hypothesis (trivial factor)");
  }
  against("cartesian.kappa3_lower", ">=", report.cartesian_kappa3,
          report.cartesian_kappa3_lower, "trivial or disconnected factor");
  against("cartesian.kappa3_upper", "<=", report.cartesian_kappa3,
          report.cartesian_kappa3_upper, "disconnected factor");

  if (fg.order >= 2 && !fg.complete && fg.connected) {
    list.Compare("lex.kappa_formula", "==", ls.kappa, fg.kappa * fh.order);
  } else {
    list.Skip("lex.kappa_formula", "==",
              "hypothesis (first factor trivial, complete or disconnected)");
  }
  against("lex.kappa3_upper", "<=", report.lex_kappa3,
          report.lex_kappa3_upper, "first factor trivial or complete");
  against("lex.kappa3_lower", ">=", report.lex_kappa3,
          report.lex_kappa3_lower, "first factor trivial");

  report.budget_exhausted = exhausted;
  return report;
}

std::string ReportCsvHeader() {
  return "index,first,second,n,m,kappa_g,kappa_h,delta_g,delta_h,kappa3_g,"
         "kappa3_h,r1,r2,kappa_cart,kappa_lex,kappa3_cart,kappa3_lex,"
         "cart_kappa_formula,cart_kappa3_lower,cart_kappa3_upper,"
         "lex_kappa3_lower,lex_kappa3_upper,passed,failed,skipped";
}

std::string ReportCsvRow(int index, const BoundReport& r) {
  std::ostringstream out;
  out << index << ',' << r.first_name << ',' << r.second_name << ','
      << r.first.order << ',' << r.second.order << ',' << r.first.kappa << ','
      << r.second.kappa << ',' << r.first.delta << ',' << r.second.delta
      << ',' << r.first.kappa3 << ',' << r.second.kappa3 << ','
      << r.first_split.r << ',' << r.second_split.r << ','
      << r.cartesian_kappa << ',' << r.lex_kappa << ','
      << Field(r.cartesian_kappa3) << ',' << Field(r.lex_kappa3) << ','
      << Field(r.cartesian_kappa_formula) << ','
      << Field(r.cartesian_kappa3_lower) << ','
      << Field(r.cartesian_kappa3_upper) << ',' << Field(r.lex_kappa3_lower)
      << ',' << Field(r.lex_kappa3_upper) << ',' << r.Count(Verdict::kPass)
      << ',' << r.Count(Verdict::kFail) << ',' << r.Count(Verdict::kSkipped);
  return out.str();
}

std::string ReportJson(const BoundReport& r, int indent) {
  using nlohmann::ordered_json;
  auto opt = [](const std::optional<int>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  auto factor = [](const std::string& name, const FactorStats& st,
                   const FourSplit& split) {
    ordered_json j;
    j["name"] = name;
    j["order"] = st.order;
    j["size"] = st.size;
    j["connected"] = st.connected;
    j["complete"] = st.complete;
    j["kappa"] = st.kappa;
    j["delta"] = st.delta;
    j["kappa3"] = st.kappa3;
    j["kappa3_exact"] = st.kappa3_exact;
    j["s"] = split.s;
    j["r"] = split.r;
    return j;
  };
  ordered_json j;
  j["first"] = factor(r.first_name, r.first, r.first_split);
  j["second"] = factor(r.second_name, r.second, r.second_split);
  j["cartesian"] = {{"order", r.cartesian_order},
                    {"kappa", r.cartesian_kappa},
                    {"kappa3", opt(r.cartesian_kappa3)},
                    {"kappa_formula", opt(r.cartesian_kappa_formula)},
                    {"kappa3_lower", opt(r.cartesian_kappa3_lower)},
                    {"kappa3_upper", opt(r.cartesian_kappa3_upper)}};
  j["lexicographic"] = {{"order", r.cartesian_order},
                        {"kappa", r.lex_kappa},
                        {"kappa3", opt(r.lex_kappa3)},
                        {"kappa3_lower", opt(r.lex_kappa3_lower)},
                        {"kappa3_upper", opt(r.lex_kappa3_upper)}};
  ordered_json checks = ordered_json::array();
  for (const BoundCheck& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"relation", c.relation},
                      {"measured", opt(c.measured)},
                      {"bound", opt(c.bound)},
                      {"verdict", VerdictName(c.verdict)},
                      {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["summary"] = {{"passed", r.Count(Verdict::kPass)},
                  {"failed", r.Count(Verdict::kFail)},
                  {"skipped", r.Count(Verdict::kSkipped)},
                  {"not_evaluated", r.Count(Verdict::kNotEvaluated)},
                  {"budget_exhausted", r.budget_exhausted}};
  return j.dump(indent);
}

}  // namespace gconn
