#include <benchmark/benchmark.h>

#include "opexact/hahn.hpp"
#include "opexact/symmetric.hpp"

using namespace opexact;

static void bm_generate_ops(benchmark::State& state) {
    FamilySpec fam = FamilySpec::jacobi(Rational(1, 2), Rational(-1, 3));
    for (auto _ : state) {
        auto ps = generate_ops(fam, state.range(0));
        benchmark::DoNotOptimize(ps);
    }
}
BENCHMARK(bm_generate_ops)->Arg(10)->Arg(20)->Arg(30);

static void bm_inner_product(benchmark::State& state) {
    FamilySpec fam = FamilySpec::jacobi(Rational(1, 2), Rational(-1, 3));
    auto ps = generate_ops(fam, state.range(0));
    for (auto _ : state) {
        Rational v = inner_product_n(ps.back(), ps.back(), fam);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_inner_product)->Arg(10)->Arg(20);

static void bm_ps_recurrence(benchmark::State& state) {
    FamilySpec fam = FamilySpec::gegenbauer(Rational(7, 3));
    for (auto _ : state) {
        auto seq = ps_integral_seq(fam, state.range(0), PSMethod::recurrence);
        benchmark::DoNotOptimize(seq);
    }
}
BENCHMARK(bm_ps_recurrence)->Arg(10)->Arg(20);

static void bm_hahn_first_identity(benchmark::State& state) {
    HahnContext ctx(Rational(1, 2), Rational(1, 3), 12);
    for (auto _ : state) {
        Rational v = first_identity(ctx, state.range(0), FirstIdentityForm::f87_quadext);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_hahn_first_identity)->Arg(4)->Arg(8)->Arg(11);

BENCHMARK_MAIN();
