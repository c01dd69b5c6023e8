#include <beslab/claims.hpp>
#include <beslab/configuration.hpp>
#include <beslab/constructions.hpp>
#include <beslab/merging.hpp>
#include <beslab/turan.hpp>
#include <beslab/weights.hpp>

#include <benchmark/benchmark.h>

using namespace beslab;

namespace
{
    auto bm_f63_search(benchmark::State & state) -> void
    {
        auto f = f63();
        ConfigQuery q{6, 8};
        for (auto _ : state)
            benchmark::DoNotOptimize(find_configuration(f, q));
    }

    auto bm_f63_claims(benchmark::State & state) -> void
    {
        auto f = f63();
        for (auto _ : state)
            benchmark::DoNotOptimize(claimed_pairs_up_to(f, 3).size());
    }

    auto bm_f63_m3plus(benchmark::State & state) -> void
    {
        auto f = f63();
        for (auto _ : state)
            benchmark::DoNotOptimize(m3plus(f).clusters.size());
    }

    auto bm_f63_certify(benchmark::State & state) -> void
    {
        auto f = f63();
        auto rule = WeightRule::make(WeightCase::K63, 3);
        for (auto _ : state)
            benchmark::DoNotOptimize(certify(f, rule).certified);
    }

    auto bm_exact_turan(benchmark::State & state) -> void
    {
        int n = static_cast<int>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(exact_turan(3, n, 7, 5).value);
    }

    auto bm_exact_turan_family(benchmark::State & state) -> void
    {
        int n = static_cast<int>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(exact_turan_family(3, n, 5).value);
    }
}

BENCHMARK(bm_f63_search)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_f63_claims)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_f63_m3plus)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_f63_certify)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_exact_turan)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_exact_turan_family)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
