#include <benchmark/benchmark.h>

#include <fimreg/rho.hpp>

using namespace fimreg;

namespace {

void BM_rho2_small(benchmark::State& state) {
    const long long d = state.range(0);
    for (auto _ : state) {
        RhoEngine eng;  // cold: includes memo construction
        benchmark::DoNotOptimize(eng.rho(2, BigInt(d), BigInt(3)));
    }
}
BENCHMARK(BM_rho2_small)->Arg(4)->Arg(8)->Arg(16);

void BM_rho2_closed_form_jump(benchmark::State& state) {
    const long long d = state.range(0);
    for (auto _ : state) {
        RhoEngine eng;
        benchmark::DoNotOptimize(eng.rho(2, BigInt(d), BigInt(17)));
    }
}
BENCHMARK(BM_rho2_closed_form_jump)->Arg(200)->Arg(2000)->Arg(20000);

void BM_rho3_tower(benchmark::State& state) {
    for (auto _ : state) {
        RhoEngine eng;
        benchmark::DoNotOptimize(eng.rho(3, BigInt(1), BigInt(6)));
    }
}
BENCHMARK(BM_rho3_tower);

void BM_gap_grid(benchmark::State& state) {
    RhoBudget tight;
    tight.max_bits = 2'000'000;
    for (auto _ : state) {
        RhoEngine eng(tight);
        int holds = 0;
        for (int m = 2; m <= 3; ++m) {
            for (long long d = 0; d <= 6; ++d) {
                for (long long r = -1; r <= 6; ++r) {
                    holds += dprime_exceeds_prime(eng, m, BigInt(d), BigInt(r)).holds ? 1 : 0;
                }
            }
        }
        benchmark::DoNotOptimize(holds);
    }
}
BENCHMARK(BM_gap_grid);

void BM_rho_table_4x4(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho_table(3, 4, 4));
    }
}
BENCHMARK(BM_rho_table_4x4);

}  // namespace

BENCHMARK_MAIN();
