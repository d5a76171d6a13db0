#include <benchmark/benchmark.h>

#include "eulersum/bernoulli.hpp"
#include "eulersum/logapps.hpp"
#include "eulersum/recip.hpp"

using namespace eulersum;

namespace {

void BM_bernoulli_number(benchmark::State& state) {
    const unsigned long order = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        Rational b = bernoulli_number(order);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_bernoulli_number)->Arg(20)->Arg(60)->Arg(120);

void BM_zeta_approx(benchmark::State& state) {
    MathContext ctx{static_cast<long>(state.range(0)), 10};
    for (auto _ : state) {
        ZetaResult z = zeta_approx(3, 10, ctx);
        benchmark::DoNotOptimize(z.value.mid);
    }
}
BENCHMARK(BM_zeta_approx)->Arg(18)->Arg(50);

void BM_euler_gamma(benchmark::State& state) {
    MathContext ctx{18, 10};
    const unsigned long anchor = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        GammaConstant g = euler_gamma(ctx, anchor);
        benchmark::DoNotOptimize(g.value.mid);
    }
}
BENCHMARK(BM_euler_gamma)->Arg(10)->Arg(100);

void BM_log_factorial(benchmark::State& state) {
    MathContext ctx{18, 10};
    const unsigned long x = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        LogSumResult r = log_factorial(x, ctx, LogBase::common);
        benchmark::DoNotOptimize(r.value.mid);
    }
}
BENCHMARK(BM_log_factorial)->Arg(100)->Arg(1000)->Arg(100000);

void BM_factorial_bracket_search(benchmark::State& state) {
    MathContext ctx{18, 10};
    const unsigned long x = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        BracketReport r = factorial_bracket_search(x, ctx);
        benchmark::DoNotOptimize(r.m_low);
    }
}
BENCHMARK(BM_factorial_bracket_search)->Arg(10)->Arg(50)->Arg(100);

} // namespace

BENCHMARK_MAIN();
