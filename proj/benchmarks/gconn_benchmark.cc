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

#include <benchmark/benchmark.h>

#include "gconn/bounds.h"
#include "gconn/connectivity.h"
#include "gconn/graph.h"
#include "gconn/lex_construct.h"
#include "gconn/product.h"
#include "gconn/steiner.h"

namespace gconn {
namespace {

Graph P(int n) { return Family(FamilyKind::kPath, n); }
Graph C(int n) { return Family(FamilyKind::kCycle, n); }
Graph K(int n) { return Family(FamilyKind::kComplete, n); }

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = LexicographicProduct(C(static_cast<int>(state.range(0))),
                                       P(3))
                      .graph();
  for (auto _ : state) benchmark::DoNotOptimize(VertexConnectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(4)->Arg(8)->Arg(16);

void BM_MaxTreePackingComplete(benchmark::State& state) {
  const Graph g = K(static_cast<int>(state.range(0)));
  const std::vector<int> s = {0, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(MaxTreePacking(g, s).size());
}
BENCHMARK(BM_MaxTreePackingComplete)->DenseRange(5, 9, 2);

void BM_Kappa3LexPath(benchmark::State& state) {
  const Graph g =
      LexicographicProduct(P(static_cast<int>(state.range(0))), P(3)).graph();
  for (auto _ : state) benchmark::DoNotOptimize(Kappa3(g).value);
}
BENCHMARK(BM_Kappa3LexPath)->Arg(3)->Arg(4)->Arg(5)
    ->Unit(benchmark::kMillisecond);

void BM_Kappa3Complete(benchmark::State& state) {
  const Graph g = K(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kappa3(g).value);
}
BENCHMARK(BM_Kappa3Complete)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_PathLexAllTriples(benchmark::State& state) {
  const ProductGraph p =
      LexicographicProduct(P(static_cast<int>(state.range(0))), K(3));
  const std::vector<Triple> triples = AllTriples(p);
  for (auto _ : state) {
    for (const Triple& s : triples) {
      benchmark::DoNotOptimize(ConstructPathLex(p, s).size());
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(triples.size()));
}
BENCHMARK(BM_PathLexAllTriples)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_GeneralLexAllTriples(benchmark::State& state) {
  const ProductGraph p = LexicographicProduct(C(4), P(3));
  GeneralLexOptions options;
  options.ell = Kappa3(C(4)).value;
  const std::vector<Triple> triples = AllTriples(p);
  for (auto _ : state) {
    for (const Triple& s : triples) {
      benchmark::DoNotOptimize(ConstructGeneralLex(p, s, options).size());
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(triples.size()));
}
BENCHMARK(BM_GeneralLexAllTriples)->Unit(benchmark::kMillisecond);

void BM_ConsistencyReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ConsistencyReport(C(4), K(2), "cycle:4", "complete:2").AllPassed());
  }
}
BENCHMARK(BM_ConsistencyReport)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace gconn

BENCHMARK_MAIN();
