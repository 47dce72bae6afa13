#include <benchmark/benchmark.h>

#include "magicsq/magicsq.hpp"

using namespace magicsq;

namespace {

SearchSpec repdigit(std::size_t n, std::size_t width)
{
    SearchSpec spec;
    spec.order = n;
    spec.width = width;
    spec.line_sum_per_place.assign(width, static_cast<int>(n));
    spec.require_distinct = true;
    return spec;
}

void BM_LayersOrder4(benchmark::State& state)
{
    for (auto _ : state) {
        std::size_t n = gen_layers({4, Alphabet{}, 4, false}, [](const Layer&) { return true; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_LayersOrder4);

void BM_PandiagonalLayersOrder5(benchmark::State& state)
{
    for (auto _ : state) {
        std::size_t n = gen_layers({5, Alphabet{}, 5, true}, [](const Layer&) { return true; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_PandiagonalLayersOrder5)->Unit(benchmark::kMillisecond);

void BM_SquareOrder4(benchmark::State& state)
{
    auto spec = repdigit(4, 4);
    for (auto _ : state) {
        spec.seed++;
        benchmark::DoNotOptimize(gen_squares(spec));
    }
}
BENCHMARK(BM_SquareOrder4)->Unit(benchmark::kMicrosecond);

void BM_PandiagonalSquareOrder5(benchmark::State& state)
{
    auto spec = repdigit(5, 4);
    spec.require_pandiagonal = true;
    for (auto _ : state) {
        spec.seed++;
        benchmark::DoNotOptimize(gen_squares(spec));
    }
}
BENCHMARK(BM_PandiagonalSquareOrder5)->Unit(benchmark::kMillisecond);

void BM_BimagicSearch(benchmark::State& state)
{
    SearchSpec spec;
    spec.order = 9;
    spec.width = 4;
    spec.require_bimagic = true;
    for (auto _ : state) {
        spec.seed++;
        benchmark::DoNotOptimize(gen_squares(spec));
    }
}
BENCHMARK(BM_BimagicSearch)->Unit(benchmark::kMicrosecond);

void BM_VerifyBimagic(benchmark::State& state)
{
    SearchSpec spec;
    spec.order = 9;
    spec.width = 4;
    spec.require_bimagic = true;
    spec.deterministic = true;
    const Square sq = gen_squares(spec).front();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(sq));
    }
}
BENCHMARK(BM_VerifyBimagic)->Unit(benchmark::kMicrosecond);

void BM_LineSums(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Square sq(n, std::vector<CodeWord>(n * n, CodeWord("123456789")));
    for (auto _ : state) {
        benchmark::DoNotOptimize(line_sums(sq));
    }
}
BENCHMARK(BM_LineSums)->Arg(9)->Arg(25)->Arg(64);

}  // namespace
BENCHMARK_MAIN();
