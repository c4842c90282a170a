#include <benchmark/benchmark.h>

#include <fimreg/homology.hpp>
#include <fimreg/module.hpp>
#include <fimreg/oracle.hpp>
#include <fimreg/presentation.hpp>

using namespace fimreg;

namespace {

void BM_build_module(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PrimeField f(101);
    auto pres = random_presentation(1, 1, 2, 2, 2, 42, n, FieldConfig{});
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_module(pres, f));
    }
}
BENCHMARK(BM_build_module)->Arg(4)->Arg(6)->Arg(8);

void BM_homology_m1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PrimeField f(101);
    auto pres = random_presentation(1, 1, 2, 2, 2, 42, n, FieldConfig{});
    auto pm = build_module(pres, f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(homology_table(pm.quotient.mod, 2));
    }
}
BENCHMARK(BM_homology_m1)->Arg(4)->Arg(6)->Arg(8);

void BM_homology_m2(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PrimeField f(101);
    auto pres = random_presentation(2, 1, 2, 2, 2, 42, n, FieldConfig{});
    auto pm = build_module(pres, f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(homology_table(pm.quotient.mod, 2));
    }
}
BENCHMARK(BM_homology_m2)->Arg(4)->Arg(5)->Arg(6);

/* The direct resolution blows up fast; N=3 is its entire practical range,
 * which is exactly why the ladder engine exists. */
void BM_oracle_m1_n3(benchmark::State& state) {
    PrimeField f(101);
    auto pres = random_presentation(1, 1, 2, 2, 2, 42, 3, FieldConfig{});
    auto pm = build_module(pres, f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tor_oracle(pm.quotient.mod, 2));
    }
}
BENCHMARK(BM_oracle_m1_n3);

void BM_homology_rationals(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RationalField f;
    auto pres = random_presentation(1, 1, 2, 2, 2, 42, n, FieldConfig::parse("rationals"));
    auto pm = build_module(pres, f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(homology_table(pm.quotient.mod, 2));
    }
}
BENCHMARK(BM_homology_rationals)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
