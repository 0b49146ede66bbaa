// Microbenchmarks for the path primitives plus end-to-end builder timings.
// Graphs are G(n, 0.3) with U[1,10] weights, pinned seed, generated per run.

#include <benchmark/benchmark.h>

#include "addspan/builders.hpp"
#include "addspan/constrained_paths.hpp"
#include "addspan/shortest_paths.hpp"
#include "addspan/verify.hpp"

using namespace addspan;

namespace {

Graph bench_graph(std::int64_t n) {
    return generate_gnp(static_cast<VertexId>(n), 0.3, 1.0, 10.0, 99);
}

void BM_dijkstra(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    for (auto _ : state) {
        SsspResult res = dijkstra(g, 0);
        benchmark::DoNotOptimize(res.dist.data());
    }
}
BENCHMARK(BM_dijkstra)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_bottleneck_dijkstra(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    for (auto _ : state) {
        BottleneckResult res = bottleneck_dijkstra(g, 0);
        benchmark::DoNotOptimize(res.bottleneck.data());
    }
}
BENCHMARK(BM_bottleneck_dijkstra)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

void BM_d_light_init(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    VertexId d = ceil_pow(g.num_vertices(), 1, 3);
    for (auto _ : state) {
        SpannerBuild h = d_light_init(g, d);
        benchmark::DoNotOptimize(h.size());
    }
}
BENCHMARK(BM_d_light_init)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_mecsp(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    SpannerBuild h = d_light_init(g, ceil_pow(g.num_vertices(), 1, 3));
    std::uint32_t budget = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) {
        MecspTable t = mecsp(g, h, 0, budget);
        benchmark::DoNotOptimize(t.value(budget - 1, g.num_vertices() - 1));
    }
}
BENCHMARK(BM_mecsp)->Args({256, 2})->Args({256, 8})->Args({1024, 8})->Unit(benchmark::kMicrosecond);

void BM_weak_csssp(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    SpannerBuild h = d_light_init(g, ceil_pow(g.num_vertices(), 1, 3));
    ReweightConfig cfg{8, 0.25, g.w_max()};
    for (auto _ : state) {
        WeakCssspResult res = weak_csssp(g, h, 0, cfg);
        benchmark::DoNotOptimize(res.dist.data());
    }
}
BENCHMARK(BM_weak_csssp)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

template <BuildResult (*Build)(const Graph&, const BuildParams&)>
void BM_builder(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    for (auto _ : state) {
        BuildResult res = Build(g, BuildParams{7});
        benchmark::DoNotOptimize(res.spanner.size());
    }
    state.counters["edges"] = static_cast<double>(Build(g, BuildParams{7}).spanner.size());
}

BuildResult build_2w_wrap(const Graph& g, const BuildParams& p) {
    static std::vector<VertexId> subset;
    subset.clear();
    VertexId k = ceil_pow(g.num_vertices(), 1, 2);
    for (VertexId i = 0; i < k; ++i) subset.push_back(i * g.num_vertices() / k);
    return build_2w_subsetwise(g, subset, p);
}

BuildResult build_6eps_wrap(const Graph& g, const BuildParams& p) {
    return build_6eps_wmax(g, 0.5, p);
}

BENCHMARK(BM_builder<build_6w>)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_builder<build_6w_fast>)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_builder<build_2w_wrap>)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_builder<build_6wmax_fast>)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_builder<build_6eps_wrap>)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_builder<build_4w_fast>)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_verify_stretch(benchmark::State& state) {
    Graph g = bench_graph(state.range(0));
    BuildResult res = build_6w_fast(g, BuildParams{7});
    StretchBound bound{BoundKind::six_w};
    for (auto _ : state) {
        StretchReport rep = verify_stretch(g, res.spanner.edges(), bound);
        benchmark::DoNotOptimize(rep.pairs_checked);
    }
}
BENCHMARK(BM_verify_stretch)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
