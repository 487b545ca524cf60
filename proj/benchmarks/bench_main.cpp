#include <benchmark/benchmark.h>

#include <hyperhom/canonical.hpp>
#include <hyperhom/constructions.hpp>
#include <hyperhom/digraphs.hpp>
#include <hyperhom/enumerate.hpp>
#include <hyperhom/homcount.hpp>
#include <hyperhom/refine.hpp>

using namespace hyperhom;

namespace {

// A connected hypergraph that grows with k: a path of size-3 edges plus loops.
Hypergraph chain(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({2 * i + 1, 2 * i + 2, 2 * i + 3});
  for (int i = 1; i <= 2 * k + 1; i += 2) edges.push_back({i});
  return Hypergraph(2 * k + 1, edges);
}

void BM_RefineHypergraph(benchmark::State& state) {
  auto g = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cr_hypergraph(g, g.num_vertices()));
}
BENCHMARK(BM_RefineHypergraph)->Arg(4)->Arg(16)->Arg(64);

void BM_RefineIncidenceGraph(benchmark::State& state) {
  auto g = incidence_graph(chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cr_graph(g, g.num_vertices(), false));
}
BENCHMARK(BM_RefineIncidenceGraph)->Arg(4)->Arg(16)->Arg(64);

void BM_CountInHom(benchmark::State& state) {
  auto f = chain(static_cast<int>(state.range(0)));
  auto g = chain(3);
  for (auto _ : state) benchmark::DoNotOptimize(count(CountKind::inhom(), f, g));
}
BENCHMARK(BM_CountInHom)->Arg(1)->Arg(2)->Arg(3);

void BM_CountLeafAdding(benchmark::State& state) {
  auto g = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count(CountKind::leaf_add_inhom(), g, g));
}
BENCHMARK(BM_CountLeafAdding)->Arg(1)->Arg(2)->Arg(3);

void BM_CountAut(benchmark::State& state) {
  auto g = single_edge(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_aut(g));
}
BENCHMARK(BM_CountAut)->Arg(4)->Arg(6)->Arg(8);

void BM_TreeDP(benchmark::State& state) {
  auto t = incidence_graph(chain(static_cast<int>(state.range(0))));
  auto g = incidence_graph(chain(4));
  for (auto _ : state) benchmark::DoNotOptimize(count_hom_cgraph(t, g));
}
BENCHMARK(BM_TreeDP)->Arg(2)->Arg(8)->Arg(32);

void BM_CanonicalEncoding(benchmark::State& state) {
  auto g = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_encoding(g));
}
BENCHMARK(BM_CanonicalEncoding)->Arg(2)->Arg(8)->Arg(32);

void BM_CanonicalEncodingBrute(benchmark::State& state) {
  auto g = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_encoding_brute(g));
}
BENCHMARK(BM_CanonicalEncodingBrute)->Arg(1)->Arg(2)->Arg(3);

void BM_EnumerateHypergraphs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enum_hypergraphs(static_cast<int>(state.range(0)), 3, 4, false, false));
}
BENCHMARK(BM_EnumerateHypergraphs)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DigraphHom(benchmark::State& state) {
  auto f = transitive_tournament(static_cast<int>(state.range(0)));
  auto g = tensor_product(transitive_tournament(4), transitive_tournament(4));
  for (auto _ : state) benchmark::DoNotOptimize(count_dihom(f, g));
}
BENCHMARK(BM_DigraphHom)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
