#include <random>

#include <benchmark/benchmark.h>

#include "lightsout/bijection.hpp"
#include "lightsout/enumeration.hpp"
#include "lightsout/gf2.hpp"
#include "lightsout/lightsout.hpp"
#include "lightsout/matchings.hpp"

using namespace lightsout;

namespace {

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() & 1) g.add_edge(i, j);
    return g;
}

void BM_det2(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    gf2::BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng() & 1);
    for (auto _ : state) benchmark::DoNotOptimize(gf2::det2(m));
}
BENCHMARK(BM_det2)->Arg(16)->Arg(32)->Arg(64);

void BM_is_extremal(benchmark::State& state) {
    std::mt19937_64 rng(2);
    Graph g = random_graph(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(is_extremal(g).extremal);
}
BENCHMARK(BM_is_extremal)->Arg(16)->Arg(32)->Arg(64);

void BM_count_matchings(benchmark::State& state) {
    std::mt19937_64 rng(3);
    Graph g = random_graph(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(count_matchings(g));
}
BENCHMARK(BM_count_matchings)->Arg(12)->Arg(16)->Arg(20);

void BM_sample_extremal(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bijection::sample_extremal(n, rng));
}
BENCHMARK(BM_sample_extremal)->Arg(8)->Arg(16)->Arg(32);

void BM_even_graph_scan(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        std::size_t extremal = 0;
        enumeration::for_each_even_graph(n, [&](const Graph& g) {
            if (is_extremal(g).extremal) ++extremal;
        });
        benchmark::DoNotOptimize(extremal);
    }
}
BENCHMARK(BM_even_graph_scan)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
