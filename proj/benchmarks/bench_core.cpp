#include <benchmark/benchmark.h>

#include "annigraph/ann_graph.hpp"
#include "annigraph/energy.hpp"
#include "annigraph/orbits.hpp"
#include "annigraph/threshold.hpp"

using namespace annigraph;

static void BM_BuildGraph(benchmark::State& state) {
    FiniteAbelianGroup g({state.range(0)});
    for (auto _ : state) {
        AnnGraph ag = build_graph(g);
        benchmark::DoNotOptimize(ag.graph.edge_count());
    }
}
BENCHMARK(BM_BuildGraph)->Arg(64)->Arg(729)->Arg(2048);

static void BM_OracleSweep(benchmark::State& state) {
    FiniteAbelianGroup g({state.range(0)});
    for (auto _ : state) {
        std::int64_t acc = 0;
        for (std::int64_t x = 0; x < g.order(); ++x)
            acc += annihilator_bruteforce(g.element(x)).generator;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_OracleSweep)->Arg(81)->Arg(243);

static void BM_AdjacencySpectrum(benchmark::State& state) {
    AnnGraph ag = build_graph(FiniteAbelianGroup({state.range(0)}));
    for (auto _ : state) {
        Spectrum s = adjacency_spectrum(ag.graph);
        benchmark::DoNotOptimize(s.eigenvalues.back());
    }
}
BENCHMARK(BM_AdjacencySpectrum)->Arg(128)->Arg(243)->Arg(729);

static void BM_AlternatingFourCycleSearch(benchmark::State& state) {
    AnnGraph ag = build_graph(FiniteAbelianGroup({state.range(0)}));
    for (auto _ : state) {
        auto w = find_alternating_4cycle(ag.graph);
        benchmark::DoNotOptimize(w.has_value());
    }
}
BENCHMARK(BM_AlternatingFourCycleSearch)->Arg(729)->Arg(2048);

static void BM_AutOrbits(benchmark::State& state) {
    FiniteAbelianGroup g({2, 2, 2, 2, 2, 2});
    for (auto _ : state) {
        auto orbits = bruteforce_aut_orbits(g);
        benchmark::DoNotOptimize(orbits.size());
    }
}
BENCHMARK(BM_AutOrbits);

BENCHMARK_MAIN();
