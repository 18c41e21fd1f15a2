#include <benchmark/benchmark.h>

#include "fpadic/checks.hpp"

using namespace fpadic;

namespace {

void BM_scalar_mul(benchmark::State& state) {
    Context ctx(state.range(0), 24);
    Scalar x = Scalar::from_rational(123456, 789, ctx);
    Scalar y = Scalar::from_rational(-98765, 4321, ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_scalar_mul)->Arg(3)->Arg(7);

void BM_euler_table(benchmark::State& state) {
    Context ctx(5, 24);
    for (auto _ : state) {
        EulerTable table(ctx);
        benchmark::DoNotOptimize(table.get(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_euler_table)->Arg(8)->Arg(32);

void BM_fermionic_sum(benchmark::State& state) {
    Context ctx(5, 24);
    UDFunction f(Polynomial::monomial(3, ctx));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermionic_sum(f, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_fermionic_sum)->Arg(3)->Arg(4)->Arg(5);

void BM_measure_value(benchmark::State& state) {
    Context ctx(5, 24);
    Measure mu = Measure::induced(UDFunction(Polynomial::monomial(4, ctx)));
    int level = static_cast<int>(state.range(0));
    Cylinder c(level == 0 ? 0 : 2, level, ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_value(mu, c));
    }
}
BENCHMARK(BM_measure_value)->Arg(1)->Arg(3)->Arg(5);

void BM_decompose(benchmark::State& state) {
    Context ctx(3, 24);
    Measure mu = Measure::induced(UDFunction(Polynomial::monomial(2, ctx)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(mu, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_decompose)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
