#include <benchmark/benchmark.h>

#include "rankone/exhaustive.hpp"
#include "rankone/lyapunov.hpp"
#include "rankone/periodic.hpp"

using namespace rankone;

namespace {

Presentation doubling() {
    return make_number_field_presentation("x2", 1, ZPoly::from({0, 1}), {QPoly::from({2})}, true);
}

Presentation two_three() {
    return make_number_field_presentation("x2x3", 2, ZPoly::from({0, 1}),
                                          {QPoly::from({2}), QPoly::from({3})}, true);
}

Presentation golden() {
    return make_number_field_presentation("fibonacci", 1, ZPoly::from({-1, -1, 1}),
                                          {QPoly::from({0, 1})}, true);
}

}  // namespace

static void BM_enumerate_doubling(benchmark::State& state) {
    Presentation pres = doubling();
    PlaceEngine eng(pres);
    const Rat theta = rat_pow(Rat(2), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_Hk(eng, theta));
}
BENCHMARK(BM_enumerate_doubling)->DenseRange(1, 5);

static void BM_enumerate_two_three(benchmark::State& state) {
    Presentation pres = two_three();
    PlaceEngine eng(pres);
    const Rat theta = rat_pow(Rat(2), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_Hk(eng, theta));
}
BENCHMARK(BM_enumerate_two_three)->DenseRange(1, 3);

static void BM_enumerate_quadratic(benchmark::State& state) {
    Presentation pres = golden();
    PlaceEngine eng(pres);
    const Rat theta = rat_pow(Rat(2), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_Hk(eng, theta));
}
BENCHMARK(BM_enumerate_quadratic)->DenseRange(1, 3);

static void BM_fix_count_product(benchmark::State& state) {
    Presentation pres = two_three();
    PlaceEngine eng(pres);
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(fix_count_product(eng, {n, -n + 1}, 128));
}
BENCHMARK(BM_fix_count_product)->Arg(2)->Arg(8)->Arg(32);

static void BM_fix_count_oracle(benchmark::State& state) {
    Presentation pres = two_three();
    PlaceEngine eng(pres);
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(fix_count_oracle(eng, {n, -n + 1}));
}
BENCHMARK(BM_fix_count_oracle)->Arg(2)->Arg(8)->Arg(32);

static void BM_abs_value_precision(benchmark::State& state) {
    Presentation pres = golden();
    PlaceEngine eng(pres);
    const FieldElement x = fe_parse("3+2*x", pres);
    const Place v = eng.S().places.front();
    const long prec = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(eng.abs_value(x, v, prec));
}
BENCHMARK(BM_abs_value_precision)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Arg(1024);

static void BM_separation(benchmark::State& state) {
    Presentation pres = two_three();
    PlaceEngine eng(pres);
    const Rat rel_tol = Rat(1) / Rat(int_pow(Int(10), static_cast<unsigned long>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(separation_constant(eng, 128, rel_tol));
}
BENCHMARK(BM_separation)->Arg(2)->Arg(4)->Arg(6);

static void BM_scan_radius(benchmark::State& state) {
    Presentation pres = doubling();
    PlaceEngine eng(pres);
    ExhaustiveSet h = enumerate_Hk(eng, rat_pow(Rat(2), state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_radius(eng, h, ScanProperty::property_I, Rat(10)));
}
BENCHMARK(BM_scan_radius)->DenseRange(1, 4);

BENCHMARK_MAIN();
