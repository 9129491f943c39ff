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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   gconn_acceptance [--expect-fail AC4,...] [--workdir DIR]
//
// Exit status is 0 iff the set of failing criteria equals the expected set,
// so a documented failure stays visible without masking new ones.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "gconn/bounds.h"
#include "gconn/connectivity.h"
#include "gconn/graph.h"
#include "gconn/lex_construct.h"
#include "gconn/product.h"
#include "gconn/random_graphs.h"
#include "gconn/steiner.h"

namespace gconn {
namespace {

constexpr uint64_t kSweepSeed = 7;
constexpr int kSweepPairs = 25;
constexpr int kSweepMaxOrder = 5;
constexpr int kProductCap = 16;

Graph P(int n) { return Family(FamilyKind::kPath, n); }
Graph C(int n) { return Family(FamilyKind::kCycle, n); }
Graph K(int n) { return Family(FamilyKind::kComplete, n); }
Graph Star(int n) { return Family(FamilyKind::kStar, n); }

Graph Spider() {
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {2, 3},
                                   {0, 4}, {4, 5}, {5, 6}};
  return Graph::FromEdges(7, edges);
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string tolerance;
  double limit_seconds;
  std::function<Outcome()> run;
};

// kappa_3 by exhaustive search; "" when exact and equal to `want`.
std::string CheckKappa3(const std::string& name, const Graph& g, int want,
                        bool* ok) {
  const ConnectivityResult r = Kappa3(g);
  *ok &= r.exact && r.value == want;
  std::ostringstream s;
  s << "kappa3(" << name << ")=" << r.value << (r.exact ? "" : "?")
    << " (want " << want << ")";
  return s.str();
}

Outcome Ac1() {
  bool ok = true;
  std::string d = CheckKappa3("P4oP3", LexicographicProduct(P(4), P(3)).graph(),
                              3, &ok);
  d += "; " + CheckKappa3("P5oP3", LexicographicProduct(P(5), P(3)).graph(),
                          3, &ok);
  return {ok, d};
}

Outcome Ac2() {
  bool ok = true;
  const ProductGraph p = LexicographicProduct(Star(4), P(3));
  std::string d = CheckKappa3("K13oP3", p.graph(), 3, &ok);
  const Triple s = ParseTriple(p, "1:0 2:0 3:0");
  std::vector<int> terminals;
  for (const ProdVertex& v : s) terminals.push_back(p.Flatten(v));
  const TreePacking leaves = MaxTreePacking(p.graph(), terminals);
  ok &= leaves.optimal && leaves.size() == 3 && leaves.verified;
  d += "; kappa(S={1:0,2:0,3:0})=" + std::to_string(leaves.size());
  return {ok, d};
}

Outcome Ac3() {
  bool ok = true;
  std::ostringstream d;
  for (int m : {2, 3}) {
    const Graph g = LexicographicProduct(P(3), K(m)).graph();
    const auto lower =
        LexKappa3Lower(ComputeFactorStats(P(3)), ComputeFactorStats(K(m)));
    const int upper = VertexConnectivity(g);
    const ConnectivityResult r = Kappa3(g);
    const bool here = lower == m && upper == m && r.exact && r.value == m;
    ok &= here;
    d << (m == 2 ? "" : "; ") << "m=" << m << ": lower "
      << (lower ? std::to_string(*lower) : "n/a") << ", kappa " << upper
      << ", oracle " << r.value;
  }
  return {ok, d.str()};
}

Outcome Ac4() {
  const ProductGraph grid = CartesianProduct(P(3), P(3));
  const ConnectivityResult r = Kappa3(grid.graph());
  std::ostringstream d;
  d << "kappa3(P3xP3)=" << r.value << " (want 2)";
  if (r.value < 2 && r.witness_terminals.size() == 3) {
    d << "; S={" << grid.Label(r.witness_terminals[0]) << ","
      << grid.Label(r.witness_terminals[1]) << ","
      << grid.Label(r.witness_terminals[2]) << "} admits " << r.witness.size()
      << " tree";
  }
  return {r.exact && r.value == 2, d.str()};
}

Outcome Ac5() {
  int families = 0;
  int failures = 0;
  for (int n : {3, 4, 5}) {
    for (const Graph& h : {P(3), K(2), K(3)}) {
      const ProductGraph p = LexicographicProduct(P(n), h);
      for (const Triple& s : AllTriples(p)) {
        const LexFamily f = ConstructPathLex(p, s);
        ++families;
        failures += !(f.verdict.valid && f.size() == h.order());
      }
    }
  }
  for (const Graph& tree : {Star(4), Spider()}) {
    const ProductGraph p = LexicographicProduct(tree, P(3));
    for (const Triple& s : AllTriples(p)) {
      const LexFamily f = ConstructTreeLex(p, s);
      ++families;
      failures += !(f.verdict.valid && f.size() == 3);
    }
  }
  return {failures == 0, std::to_string(families) + " triples, " +
                             std::to_string(failures) + " failures"};
}

Outcome Ac6() {
  struct Case {
    std::string name;
    Graph g;
    Graph h;
  };
  bool ok = true;
  std::ostringstream d;
  int total = 0;
  int fallbacks = 0;
  for (const Case& c : {Case{"C4oK2", C(4), K(2)}, Case{"C4oP3", C(4), P(3)},
                        Case{"K4oK2", K(4), K(2)}}) {
    const ProductGraph p = LexicographicProduct(c.g, c.h);
    const int ell = Kappa3(c.g).value;
    GeneralLexOptions options;
    options.ell = ell;
    int bad = 0;
    int used = 0;
    int count = 0;
    for (const Triple& s : AllTriples(p)) {
      const LexFamily f = ConstructGeneralLex(p, s, options);
      ++count;
      bad += !(f.verdict.valid && f.size() >= ell * c.h.order());
      used += f.used_fallback;
    }
    ok &= bad == 0;
    total += count;
    fallbacks += used;
    d << c.name << " ell=" << ell << " target " << ell * c.h.order() << ": "
      << count << " triples, " << bad << " short, " << used
      << " fallbacks; ";
  }
  d << "fallback rate " << fallbacks << "/" << total;
  return {ok, d.str()};
}

Outcome Ac7() {
  int cart_bad = 0;
  int lex_bad = 0;
  const auto pairs = RandomFactorPairs(kSweepSeed, kSweepPairs, kSweepMaxOrder);
  for (const auto& [g, h] : pairs) {
    const FactorStats fg = ComputeFactorStats(g);
    const FactorStats fh = ComputeFactorStats(h);
    cart_bad += CartesianKappaFormula(fg, fh) !=
                VertexConnectivity(CartesianProduct(g, h).graph());
    lex_bad += fg.kappa * h.order() !=
               VertexConnectivity(LexicographicProduct(g, h).graph());
  }
  return {cart_bad == 0 && lex_bad == 0 && pairs.size() == kSweepPairs,
          std::to_string(pairs.size()) + " pairs (seed " +
              std::to_string(kSweepSeed) + "), cartesian mismatches " +
              std::to_string(cart_bad) + ", lex mismatches " +
              std::to_string(lex_bad)};
}

Outcome Ac8() {
  ReportOptions options;
  options.product_cap = kProductCap;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int pending = 0;
  bool exhausted = false;
  std::string first_failure;
  for (const auto& [g, h] :
       RandomFactorPairs(kSweepSeed, kSweepPairs, kSweepMaxOrder)) {
    const BoundReport r = ConsistencyReport(g, h, "g", "h", options);
    passed += r.Count(Verdict::kPass);
    failed += r.Count(Verdict::kFail);
    skipped += r.Count(Verdict::kSkipped);
    pending += r.Count(Verdict::kNotEvaluated);
    exhausted |= r.budget_exhausted;
    for (const BoundCheck& c : r.checks) {
      if (c.verdict == Verdict::kFail && first_failure.empty()) {
        first_failure = c.name;
      }
    }
  }
  std::ostringstream d;
  d << passed << " pass, " << failed << " fail, " << skipped << " skipped, "
    << pending << " above cap";
  if (exhausted) d << ", budget exhausted";
  if (!first_failure.empty()) d << ", first failure " << first_failure;
  return {failed == 0 && !exhausted && passed > 0, d.str()};
}

Outcome Ac9() {
  int checked = 0;
  std::string bad;
  for (int n = 2; n <= 7; ++n) {
    for (int k = 2; k <= n; ++k) {
      const ConnectivityResult r = GeneralizedConnectivity(K(n), k);
      ++checked;
      if (!r.exact || r.value != KappaKComplete(n, k)) {
        bad += " K" + std::to_string(n) + ",k=" + std::to_string(k);
      }
    }
  }
  return {bad.empty(),
          std::to_string(checked) + " (n,k) pairs" +
              (bad.empty() ? "" : "; mismatches:" + bad)};
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Outcome Ac10(const std::filesystem::path& workdir) {
  // Each command runs twice with identical arguments; every output file and
  // the console output must match byte for byte.
  const std::vector<std::vector<std::string>> commands = {
      {"construct", "--lex", "path:4", "path:3", "--all-triples", "--out",
       "@construct.json"},
      {"construct", "--lex", "cycle:4", "path:3", "--sample", "25", "--seed",
       "7", "--out", "@sample.json"},
      {"kappa", "--lex", "star:4", "path:3", "--out", "@kappa.json"},
      {"bounds", "--random-pairs", "25", "--max-order", "4", "--seed", "7",
       "--csv", "@bounds.csv", "--json", "@bounds.json"},
  };
  int compared = 0;
  std::string diff;
  for (size_t c = 0; c < commands.size(); ++c) {
    std::vector<std::string> seen[2];
    for (int run = 0; run < 2; ++run) {
      std::vector<std::string> args = {"gconn"};
      std::vector<std::filesystem::path> files;
      for (const std::string& a : commands[c]) {
        if (a[0] == '@') {
          files.push_back(workdir /
                          ("run" + std::to_string(run) + "_" + a.substr(1)));
          args.push_back(files.back().string());
        } else {
          args.push_back(a);
        }
      }
      std::vector<const char*> argv;
      for (const std::string& a : args) argv.push_back(a.c_str());
      std::ostringstream out;
      std::ostringstream err;
      cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
      // Console summaries never echo file paths, so they compare directly.
      seen[run].push_back(out.str());
      for (const auto& f : files) seen[run].push_back(Slurp(f));
    }
    for (size_t i = 0; i < seen[0].size(); ++i) {
      ++compared;
      if (seen[0][i] != seen[1][i] || (i > 0 && seen[0][i].empty())) {
        diff += " " + commands[c][0] + "#" + std::to_string(i);
      }
    }
  }
  return {diff.empty(), std::to_string(compared) + " outputs compared" +
                            (diff.empty() ? "" : "; differing:" + diff)};
}

std::set<std::string> SplitList(const std::string& text) {
  std::set<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

}  // namespace
}  // namespace gconn

int main(int argc, char** argv) {
  using namespace gconn;
  std::set<std::string> expected;
  std::filesystem::path workdir = std::filesystem::temp_directory_path();
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected = SplitList(argv[++i]);
    } else if (arg == "--workdir" && i + 1 < argc) {
      workdir = argv[++i];
    } else {
      std::cerr << "usage: " << argv[0]
                << " [--expect-fail AC4,...] [--workdir DIR]\n";
      return 4;
    }
  }
  std::filesystem::create_directories(workdir);

  const std::vector<Criterion> criteria = {
      {"AC1", "exact", 300, Ac1},
      {"AC2", "exact", 300, Ac2},
      {"AC3", "exact", 300, Ac3},
      {"AC4", "exact", 120, Ac4},
      {"AC5", "exact count, zero verifier failures", 600, Ac5},
      {"AC6", "count >= ell*|V(H)|, zero verifier failures", 900, Ac6},
      {"AC7", "exact", 600, Ac7},
      {"AC8", "zero violations", 1200, Ac8},
      {"AC9", "exact", 600, Ac9},
      {"AC10", "byte-identical", 600, [&] { return Ac10(workdir); }},
  };

  std::set<std::string> failed;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) failed.insert(c.id);
    std::ostringstream timing;
    timing.setf(std::ios::fixed);
    timing.precision(2);
    timing << seconds << "s/" << static_cast<int>(c.limit_seconds) << "s";
    std::cout << c.id << " " << (pass ? "PASS" : "FAIL") << " [tolerance: "
              << c.tolerance << "; time " << timing.str()
              << (in_time ? "" : " EXCEEDED") << "] " << o.detail << "\n";
  }
  std::cout << "summary: " << criteria.size() - failed.size() << " pass, "
            << failed.size() << " fail";
  if (!expected.empty()) {
    std::cout << " (expected failures:";
    for (const std::string& id : expected) std::cout << " " << id;
    std::cout << ")";
  }
  std::cout << "\n";
  if (failed != expected) {
    for (const std::string& id : failed) {
      if (!expected.count(id)) std::cout << "unexpected failure: " << id << "\n";
    }
    for (const std::string& id : expected) {
      if (!failed.count(id)) std::cout << "unexpected pass: " << id << "\n";
    }
    return 1;
  }
  return 0;
}
