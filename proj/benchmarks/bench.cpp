#include <benchmark/benchmark.h>

#include "edgeham/cw_pipeline.hpp"
#include "edgeham/decomposition.hpp"
#include "edgeham/generators.hpp"
#include "edgeham/hyper_solver.hpp"
#include "edgeham/oracle.hpp"
#include "edgeham/tw_solver.hpp"
#include "edgeham/vc_kernel.hpp"

using namespace edgeham;

namespace {

// n x n grid.
Graph grid(int n) {
  std::vector<VertexPair> pairs;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int v = r * n + c;
      if (c + 1 < n) pairs.emplace_back(v, v + 1);
      if (r + 1 < n) pairs.emplace_back(v, v + n);
    }
  }
  return build_graph(n * n, pairs);
}

void BM_OracleCycle(benchmark::State& state) {
  const Graph g = random_gnm(10, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_edge_ham_exact(g, Mode::Cycle).answer());
}
BENCHMARK(BM_OracleCycle)->DenseRange(12, 20, 4);

void BM_DesOracle(benchmark::State& state) {
  const Graph g = random_gnm(9, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_des_exact(g).answer());
}
BENCHMARK(BM_DesOracle)->DenseRange(10, 18, 4);

void BM_TreewidthDpGrid(benchmark::State& state) {
  const Graph g = grid(static_cast<int>(state.range(0)));
  const NiceDecomposition nice = make_nice(g, min_fill_decomposition(g));
  for (auto _ : state) benchmark::DoNotOptimize(des_dp(g, nice).answer());
  state.counters["width"] = nice.width();
}
BENCHMARK(BM_TreewidthDpGrid)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

void BM_MinFill(benchmark::State& state) {
  const Graph g = random_gnm(static_cast<int>(state.range(0)), 3 * static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(min_fill_decomposition(g).width());
}
BENCHMARK(BM_MinFill)->RangeMultiplier(2)->Range(16, 128);

void BM_Kernelize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GeneratedInstance gi = random_vc_bounded(n, 3, 2 * n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(kernelize(gi.graph(), gi.planted).kernel.edge_count());
}
BENCHMARK(BM_Kernelize)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_HyperColorCoding(benchmark::State& state) {
  const GeneratedInstance gi = random_hyper_hs(12, 2, static_cast<int>(state.range(0)), 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(decide_hyper_ehp(gi.hypergraph(), gi.planted).answer());
}
BENCHMARK(BM_HyperColorCoding)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_CliqueWidthPipeline(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  CwExpr e;
  e.label_budget = 2;
  int x = e.intro(1);
  for (int i = 1; i < a; ++i) x = e.unite(x, e.intro(1));
  for (int i = 0; i < a; ++i) x = e.unite(x, e.intro(2));
  e.join(1, 2, x);
  for (auto _ : state) benchmark::DoNotOptimize(decide_ehc_cw(e).answer);
}
BENCHMARK(BM_CliqueWidthPipeline)->DenseRange(7, 13, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
