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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gconn/bounds.h"
#include "gconn/certificate.h"
#include "gconn/connectivity.h"
#include "gconn/graph.h"
#include "gconn/lex_construct.h"
#include "gconn/product.h"
#include "gconn/random_graphs.h"
#include "gconn/steiner.h"
#include "json.hpp"

namespace gconn::cli {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kFilePrefix = "file:";

// A factor source: a family spec, "graph6:<code>" or "file:<edge list>".
// Files are recorded as graph6 so certificates stay self-contained.
FactorRecord LoadFactor(const std::string& spec) {
  if (spec.rfind(kFilePrefix, 0) == 0) {
    Graph g = ReadEdgeListFile(spec.substr(kFilePrefix.size()));
    return {"graph6:" + WriteGraph6(g), std::move(g)};
  }
  return {spec, ParseFamilySpec(spec)};
}

int64_t ParseBudget(const std::string& text) {
  size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(value) || value < 1 ||
      value > 1e18 || value != std::floor(value)) {
    throw InputError("budget must be a positive integer, got '" + text + "'");
  }
  return static_cast<int64_t>(value);
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
  if (!file) throw InputError("failed writing '" + path + "'");
}

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

// ---------------------------------------------------------------- kappa

struct KappaConfig {
  std::string family;
  std::string edges;
  std::string graph6;
  std::vector<std::string> lex;
  std::vector<std::string> cartesian;
  std::vector<int> ks;
  std::string budget = "1e7";
  std::string out;
  std::string format = "text";
};

Certificate KappaCertificate(const std::vector<FactorRecord>& factors,
                             std::optional<ProductKind> kind,
                             const ConnectivityResult& r) {
  Certificate cert;
  cert.factors = factors;
  cert.product_kind = kind;
  cert.terminals = r.witness_terminals;
  cert.trees = r.witness.trees;
  cert.provenance.assign(cert.trees.size(), "oracle");
  cert.verdict = Reverify(cert);
  cert.stats = {{"k", r.k},
                {"value", r.value},
                {"exact", r.exact ? 1 : 0},
                {"nodes", r.nodes},
                {"sets_examined", r.sets_examined}};
  return cert;
}

int RunKappa(const KappaConfig& config, std::ostream& out) {
  const int sources = !config.family.empty() + !config.edges.empty() +
                      !config.graph6.empty() + !config.lex.empty() +
                      !config.cartesian.empty();
  if (sources != 1) {
    throw InputError(
        "give exactly one of --family, --edges, --graph6, --lex, --cartesian");
  }
  std::vector<FactorRecord> factors;
  std::optional<ProductKind> kind;
  if (!config.family.empty()) factors.push_back(LoadFactor(config.family));
  if (!config.edges.empty()) {
    factors.push_back(LoadFactor(std::string(kFilePrefix) + config.edges));
  }
  if (!config.graph6.empty()) {
    factors.push_back(LoadFactor("graph6:" + config.graph6));
  }
  for (const auto* pair : {&config.lex, &config.cartesian}) {
    if (pair->empty()) continue;
    kind = pair == &config.lex ? ProductKind::kLexicographic
                               : ProductKind::kCartesian;
    factors.push_back(LoadFactor((*pair)[0]));
    factors.push_back(LoadFactor((*pair)[1]));
  }
  Certificate shape;
  shape.factors = factors;
  shape.product_kind = kind;
  const Graph graph = HostGraph(shape);
  if (graph.order() == 0) throw InputError("graph has no vertices");

  std::vector<int> ks = {3};
  for (int k : config.ks) {
    if (k < 2) throw InputError("--k must be at least 2");
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  }
  SearchOptions search;
  search.budget = ParseBudget(config.budget);

  const int kappa = VertexConnectivity(graph);
  const int delta = MinDegree(graph);
  std::vector<ConnectivityResult> results;
  std::vector<Certificate> certs;
  bool exhausted = false;
  bool invalid = false;
  for (int k : ks) {
    if (k > graph.order() && graph.order() < 2) {
      throw InputError("k exceeds the number of vertices");
    }
    ConnectivityResult r;
    try {
      r = GeneralizedConnectivity(graph, k, search);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    exhausted |= !r.exact;
    certs.push_back(KappaCertificate(factors, kind, r));
    invalid |= !certs.back().verdict.valid;
    results.push_back(std::move(r));
  }

  if (config.format == "json") {
    ordered_json j;
    j["n"] = graph.order();
    j["m"] = graph.size();
    j["kappa"] = kappa;
    j["delta"] = delta;
    ordered_json list = ordered_json::array();
    for (size_t i = 0; i < results.size(); ++i) {
      list.push_back({{"k", results[i].k},
                      {"value", results[i].value},
                      {"exact", results[i].exact},
                      {"certificate", ordered_json::parse(
                                          CertificateJson(certs[i]))}});
    }
    j["kappa_k"] = list;
    out << j.dump(2) << "\n";
  } else {
    out << "n: " << graph.order() << "\n";
    out << "m: " << graph.size() << "\n";
    out << "kappa: " << kappa << "\n";
    out << "delta: " << delta << "\n";
    for (const ConnectivityResult& r : results) {
      out << "kappa_" << r.k << ": " << r.value;
      if (!r.exact) out << " (upper bound; budget exhausted)";
      out << "\n";
    }
  }
  if (!config.out.empty()) WriteFile(config.out, CertificatesJson(certs));
  if (invalid) return kExitVerification;
  return exhausted ? kExitBudget : kExitOk;
}

// ------------------------------------------------------------ construct

struct ConstructConfig {
  std::vector<std::string> lex;
  std::string terminals;
  bool all_triples = false;
  int sample = 0;
  uint64_t seed = 1;
  std::string method = "auto";
  std::optional<int> ell;
  bool check_oracle = false;
  std::string budget = "1e7";
  std::string out;
};

std::vector<Triple> SampleTriples(const ProductGraph& product, int count,
                                  uint64_t seed) {
  std::vector<Triple> all = AllTriples(product);
  std::mt19937_64 rng(seed);
  const size_t n = all.size();
  const size_t take = std::min(static_cast<size_t>(count), n);
  std::vector<size_t> index(n);
  for (size_t i = 0; i < n; ++i) index[i] = i;
  for (size_t i = 0; i < take; ++i) {
    const size_t j = i + UniformBelow(rng, n - i);
    std::swap(index[i], index[j]);
  }
  index.resize(take);
  std::sort(index.begin(), index.end());
  std::vector<Triple> picked;
  for (size_t i : index) picked.push_back(all[i]);
  return picked;
}

bool IsPathGraph(const Graph& g) {
  if (!IsTree(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

int RunConstruct(const ConstructConfig& config, std::ostream& out) {
  const int modes = !config.terminals.empty() + config.all_triples +
                    (config.sample > 0);
  if (modes != 1) {
    throw InputError("give exactly one of --terminals, --all-triples, --sample");
  }
  const FactorRecord g = LoadFactor(config.lex[0]);
  const FactorRecord h = LoadFactor(config.lex[1]);
  if (g.graph.order() < 2 || !IsConnected(g.graph)) {
    throw InputError("first factor must be connected with at least 2 vertices");
  }
  if (h.graph.order() < 1) throw InputError("second factor is empty");
  const ProductGraph product = LexicographicProduct(g.graph, h.graph);

  std::string method = config.method;
  if (method == "auto") {
    method = IsPathGraph(g.graph) ? "path"
             : IsTree(g.graph)    ? "tree"
                                  : "general";
  }

  std::vector<Triple> triples;
  if (!config.terminals.empty()) {
    triples.push_back(ParseTriple(product, config.terminals));
  } else if (config.all_triples) {
    triples = AllTriples(product);
  } else {
    triples = SampleTriples(product, config.sample, config.seed);
  }

  GeneralLexOptions options;
  options.search.budget = ParseBudget(config.budget);
  if (method == "general") {
    if (config.ell) {
      options.ell = *config.ell;
    } else {
      const ConnectivityResult r = Kappa3(g.graph, options.search);
      if (!r.exact) {
        out << "error: kappa_3 of the first factor exhausted the budget\n";
        return kExitBudget;
      }
      options.ell = r.value;
    }
  }

  std::vector<Certificate> certs;
  int failed = 0;
  int fallbacks = 0;
  int relaned = 0;
  int64_t trees = 0;
  for (const Triple& s : triples) {
    LexFamily family;
    try {
      if (method == "path") {
        family = ConstructPathLex(product, s);
      } else if (method == "tree") {
        family = ConstructTreeLex(product, s);
      } else {
        family = ConstructGeneralLex(product, s, options);
      }
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    Certificate cert;
    cert.factors = {g, h};
    cert.product_kind = ProductKind::kLexicographic;
    cert.terminals = family.terminals;
    cert.trees = family.trees;
    cert.provenance = family.provenance;
    cert.verdict = family.verdict;
    cert.note = family.note;
    cert.stats = {{"target", family.target},
                  {"trees", family.size()},
                  {"used_fallback", family.used_fallback ? 1 : 0},
                  {"relaned_trees", family.relaned_trees}};
    bool ok = family.ok();
    if (config.check_oracle) {
      const TreePacking best =
          MaxTreePacking(product.graph(), family.terminals, options.search);
      cert.stats.emplace_back("oracle_kappa_s", best.size());
      cert.stats.emplace_back("oracle_exact", best.optimal ? 1 : 0);
      if (best.optimal && best.size() < family.size()) ok = false;
    }
    if (!ok && cert.verdict.valid) {
      cert.verdict.valid = false;
      cert.verdict.message = "only " + std::to_string(family.size()) +
                             " of " + std::to_string(family.target) +
                             " trees";
    }
    failed += !ok;
    fallbacks += family.used_fallback;
    relaned += family.relaned_trees;
    trees += family.size();
    certs.push_back(std::move(cert));
  }

  const std::string json = CertificatesJson(certs);
  if (config.out.empty()) {
    out << json << "\n";
  } else {
    WriteFile(config.out, json);
    out << "method: " << method << "\n";
    out << "certificates: " << certs.size() << "\n";
    out << "trees: " << trees << "\n";
    out << "verified: " << certs.size() - failed << "\n";
    out << "failed: " << failed << "\n";
    out << "fallbacks: " << fallbacks << "\n";
    out << "relaned_trees: " << relaned << "\n";
  }
  return failed > 0 ? kExitVerification : kExitOk;
}

// --------------------------------------------------------------- verify

int RunVerify(const std::string& path, std::ostream& out) {
  const std::vector<Certificate> certs = LoadCertificates(ReadFile(path));
  int rejected = 0;
  for (size_t i = 0; i < certs.size(); ++i) {
    const PackingVerdict v = Reverify(certs[i]);
    out << "certificate " << i << ": ";
    if (v.valid) {
      out << "ok (" << certs[i].trees.size() << " trees)\n";
    } else {
      out << "reject: " << v.message << "\n";
      ++rejected;
    }
  }
  out << "accepted: " << certs.size() - rejected << "\n";
  out << "rejected: " << rejected << "\n";
  return rejected > 0 ? kExitVerification : kExitOk;
}

// --------------------------------------------------------------- bounds

struct BoundsConfig {
  std::vector<std::string> pairs;
  int random_pairs = 0;
  int max_order = 5;
  uint64_t seed = 1;
  std::string csv;
  std::string json;
  int product_cap = 16;
  std::string budget = "1e7";
};

int RunBounds(const BoundsConfig& config, std::ostream& out) {
  struct Item {
    FactorRecord first;
    FactorRecord second;
  };
  std::vector<Item> items;
  for (const std::string& pair : config.pairs) {
    const size_t comma = pair.find(',');
    if (comma == std::string::npos) {
      throw InputError("--pair wants A,B, got '" + pair + "'");
    }
    items.push_back({LoadFactor(pair.substr(0, comma)),
                     LoadFactor(pair.substr(comma + 1))});
  }
  if (config.random_pairs > 0) {
    if (config.max_order < 3) throw InputError("--max-order must be >= 3");
    for (auto& [a, b] : RandomFactorPairs(config.seed, config.random_pairs,
                                           config.max_order)) {
      items.push_back({{"graph6:" + WriteGraph6(a), a},
                       {"graph6:" + WriteGraph6(b), b}});
    }
  }
  if (items.empty()) throw InputError("give --pair or --random-pairs");

  ReportOptions options;
  options.product_cap = config.product_cap;
  options.search.budget = ParseBudget(config.budget);

  std::string csv = ReportCsvHeader() + "\n";
  ordered_json reports = ordered_json::array();
  int failed = 0;
  bool exhausted = false;
  for (size_t i = 0; i < items.size(); ++i) {
    const Item& item = items[i];
    if (item.first.graph.order() == 0 || item.second.graph.order() == 0) {
      throw InputError("factors must be nonempty");
    }
    const BoundReport report =
        ConsistencyReport(item.first.graph, item.second.graph,
                          item.first.spec, item.second.spec, options);
    csv += ReportCsvRow(static_cast<int>(i), report) + "\n";
    reports.push_back(ordered_json::parse(ReportJson(report)));
    exhausted |= report.budget_exhausted;
    failed += report.Count(Verdict::kFail);

    out << "pair " << i << ": " << item.first.spec << ", "
        << item.second.spec << "\n";
    auto show = [&out](const char* name, const std::optional<int>& v) {
      out << "  " << name << ": "
          << (v ? std::to_string(*v) : std::string("n/a")) << "\n";
    };
    show("kappa3_cartesian", report.cartesian_kappa3);
    show("kappa3_lex", report.lex_kappa3);
    for (const BoundCheck& c : report.checks) {
      out << "  " << c.name << " " << c.relation << " : ";
      if (c.verdict == Verdict::kSkipped && !c.detail.empty()) {
        out << c.detail << "\n";
        continue;
      }
      out << VerdictName(c.verdict);
      if (c.measured || c.bound) {
        out << " (measured "
            << (c.measured ? std::to_string(*c.measured) : "n/a")
            << ", bound " << (c.bound ? std::to_string(*c.bound) : "n/a")
            << ")";
      }
      if (!c.detail.empty()) out << " " << c.detail;
      out << "\n";
    }
  }
  out << "pairs: " << items.size() << "\n";
  out << "failed checks: " << failed << "\n";

  if (!config.csv.empty()) WriteFile(config.csv, csv);
  if (!config.json.empty()) {
    ordered_json j;
    j["reports"] = reports;
    WriteFile(config.json, j.dump(2) + "\n");
  }
  if (failed > 0) return kExitVerification;
  return exhausted ? kExitBudget : kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generalized connectivity of graphs and graph products"};
  app.require_subcommand(1);

  KappaConfig kappa;
  CLI::App* kappa_cmd =
      app.add_subcommand("kappa", "kappa, delta and exact kappa_k of a graph");
  kappa_cmd->add_option("--family", kappa.family, "family spec, e.g. path:5");
  kappa_cmd->add_option("--edges", kappa.edges, "edge-list file");
  kappa_cmd->add_option("--graph6", kappa.graph6, "graph6 string");
  kappa_cmd->add_option("--lex", kappa.lex, "lexicographic product G H")
      ->expected(2);
  kappa_cmd->add_option("--cartesian", kappa.cartesian,
                        "Cartesian product G H")
      ->expected(2);
  kappa_cmd->add_option("--k", kappa.ks, "extra k values (k = 3 always)");
  kappa_cmd->add_option("--budget", kappa.budget, "search nodes per set");
  kappa_cmd->add_option("--out", kappa.out, "certificate JSON file");
  kappa_cmd->add_option("--format", kappa.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  ConstructConfig construct;
  CLI::App* construct_cmd = app.add_subcommand(
      "construct", "disjoint S-tree families in a lexicographic product");
  construct_cmd->add_option("--lex", construct.lex, "factors G H")
      ->expected(2)
      ->required();
  construct_cmd->add_option("--terminals", construct.terminals,
                            "terminal triple \"g:h g:h g:h\"");
  construct_cmd->add_flag("--all-triples", construct.all_triples);
  construct_cmd->add_option("--sample", construct.sample,
                            "number of random triples");
  construct_cmd->add_option("--seed", construct.seed, "sampling seed");
  construct_cmd->add_option("--method", construct.method)
      ->check(CLI::IsMember({"auto", "path", "tree", "general"}));
  construct_cmd->add_option("--ell", construct.ell, "kappa_3 of G")
      ->check(CLI::PositiveNumber);
  construct_cmd->add_flag("--check-oracle", construct.check_oracle,
                          "compare with the exact maximum");
  construct_cmd->add_option("--budget", construct.budget);
  construct_cmd->add_option("--out", construct.out, "certificate JSON file");

  std::string cert_path;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "re-verify certificate files");
  verify_cmd->add_option("--cert", cert_path)->required();

  BoundsConfig bounds;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "check product bounds against exact values");
  bounds_cmd->add_option("--pair", bounds.pairs, "factor pair A,B");
  bounds_cmd->add_option("--random-pairs", bounds.random_pairs);
  bounds_cmd->add_option("--max-order", bounds.max_order);
  bounds_cmd->add_option("--seed", bounds.seed);
  bounds_cmd->add_option("--csv", bounds.csv, "CSV sweep file");
  bounds_cmd->add_option("--json", bounds.json, "JSON report file");
  bounds_cmd->add_option("--product-cap", bounds.product_cap)
      ->check(CLI::NonNegativeNumber);
  bounds_cmd->add_option("--budget", bounds.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*kappa_cmd) return RunKappa(kappa, out);
    if (*construct_cmd) return RunConstruct(construct, out);
    if (*verify_cmd) return RunVerify(cert_path, out);
    return RunBounds(bounds, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace gconn::cli
