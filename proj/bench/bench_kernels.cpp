#include <benchmark/benchmark.h>

#include "subdiff/optimizer.hpp"
#include "subdiff/oracle.hpp"
#include "subdiff/parallel.hpp"

namespace {

using subdiff::ExecPolicy;

ExecPolicy policy(const benchmark::State& state)
{
    return state.range(0) == 0 ? ExecPolicy::serial : ExecPolicy::parallel;
}

void BM_OptimizeExponent(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(subdiff::optimizer::optimize_exponent(
            0.5, 1.0, subdiff::optimizer::Method::paper_k1, {}, policy(state)));
}
BENCHMARK(BM_OptimizeExponent)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_Table1(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(subdiff::optimizer::table1(subdiff::optimizer::default_table1_diffusivities(),
                                                            subdiff::optimizer::default_table1_orders(),
                                                            subdiff::optimizer::Method::paper_k1, policy(state)));
}
BENCHMARK(BM_Table1)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Compare(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(subdiff::oracle::compare(0.3, 1.0, 0.0, 0.5, 50,
                                                          subdiff::oracle::OrderReading::half_order, policy(state)));
}
BENCHMARK(BM_Compare)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
