#include <benchmark/benchmark.h>

#include "femtomkt/bench_solver.hpp"
#include "femtomkt/demand.hpp"
#include "femtomkt/oracle.hpp"
#include "femtomkt/quadrature.hpp"
#include "femtomkt/stage1.hpp"
#include "femtomkt/welfare.hpp"

namespace {

using namespace femtomkt;

void BM_ClearingPrice(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_benchmark(1.1));
    }
}
BENCHMARK(BM_ClearingPrice);

void BM_SolveStage1(benchmark::State& state) {
    MarketParams mkt{state.range(0) / 10.0, 0.0, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_stage1(mkt));
    }
}
BENCHMARK(BM_SolveStage1)->Arg(11)->Arg(21)->Arg(50);

void BM_RegimeBoundary(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_regime_boundary(0.0, 1.0, 2.0, 8.0, 0.01));
    }
}
BENCHMARK(BM_RegimeBoundary);

void BM_ConsumerSurplus(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(consumer_surplus_benchmark(2.1));
    }
}
BENCHMARK(BM_ConsumerSurplus);

void BM_GridArgmax(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            grid_argmax_femto(0.2, 2.0, 0.0, 1.0, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_GridArgmax)->Arg(500)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
