// Serial reference kernels against their OpenMP counterparts on Koch-level
// inputs, which is where the table commands spend their time.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "chains/builders.hpp"
#include "chains/kernels.hpp"
#include "chains/tri_poly.hpp"

namespace {

using chains::ExtNum;

const chains::PolyPair<ExtNum>& koch_polys(unsigned s) {
    static std::vector<chains::PolyPair<ExtNum>> cache;
    while (cache.size() <= s) {
        cache.push_back(chains::tri_poly<ExtNum>(chains::koch(static_cast<unsigned>(cache.size()))));
    }
    return cache[s];
}

template <bool Parallel>
void vee_combine(benchmark::State& state) {
    const auto& p = koch_polys(static_cast<unsigned>(state.range(0))).lower;
    const std::span<const ExtNum> a(p.coeffs);
    for (auto _ : state) {
        auto out = Parallel ? chains::kernels::parallel::vee_combine(a, a) : chains::kernels::serial::vee_combine(a, a);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(a.size() * a.size()));
    state.counters["threads"] = Parallel ? omp_get_max_threads() : 1;
}

template <bool Parallel>
void wedge_combine(benchmark::State& state) {
    const auto& p = koch_polys(static_cast<unsigned>(state.range(0))).upper;
    const std::span<const ExtNum> a(p.coeffs);
    for (auto _ : state) {
        auto out =
            Parallel ? chains::kernels::parallel::wedge_combine(a, a) : chains::kernels::serial::wedge_combine(a, a);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(a.size() * a.size()));
}

BENCHMARK(vee_combine<false>)->Name("vee/serial")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(vee_combine<true>)->Name("vee/parallel")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(wedge_combine<false>)->Name("wedge/serial")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(wedge_combine<true>)->Name("wedge/parallel")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
