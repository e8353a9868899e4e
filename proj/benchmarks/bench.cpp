#include <benchmark/benchmark.h>

#include "polar/constructions.hpp"
#include "polar/symplectic.hpp"
#include "polar/twograph.hpp"

using namespace polar;

static void BM_BuildAndScanLargeGraph(benchmark::State& state) {
  Field f(1);
  Space s = Space::standard(f, int(state.range(0)));
  for (auto _ : state) {
    Graph g = build_no_even(elliptic_form(s));  // includes the exhaustive scan
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_BuildAndScanLargeGraph)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SwitchingCertificate(benchmark::State& state) {
  Field f4(2);
  Space s = Space::standard(f4, int(state.range(0)));
  QuadraticForm theta = hyperbolic_form(s);
  Graph g_even = build_no_even(trace_lift(theta));
  Graph g_odd = build_no_odd(theta);
  for (auto _ : state) {
    auto y = switching_equivalence(g_even, g_odd);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_SwitchingCertificate)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_GroupClosure(benchmark::State& state) {
  Field f(1);
  Space s = Space::standard(f, int(state.range(0)));
  auto gens = all_transvections(s);
  for (auto _ : state) {
    auto g = generate_group(gens, 10'000'000);
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(BM_GroupClosure)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_TwoGraphDegree(benchmark::State& state) {
  Field f(1);
  Space s = Space::standard(f, 3);
  TwoGraph t = symplectic_two_graph(elliptic_form(s));
  for (auto _ : state) benchmark::DoNotOptimize(t.regular_degree());
}
BENCHMARK(BM_TwoGraphDegree)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
