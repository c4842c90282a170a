#include <benchmark/benchmark.h>

#include <fimreg/field.hpp>
#include <fimreg/matrix.hpp>
#include <fimreg/rng.hpp>

using namespace fimreg;

namespace {

template <class F>
Mat<F> random_square(const F& f, int n, std::uint64_t seed) {
    DetRng rng(seed);
    Mat<F> a(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            a.at(r, c) = f.from_int(static_cast<std::int64_t>(rng.below(101)));
        }
    }
    return a;
}

void BM_mat_mul_prime(benchmark::State& state) {
    PrimeField f(101);
    const int n = static_cast<int>(state.range(0));
    auto a = random_square(f, n, 1);
    auto b = random_square(f, n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_mul(f, a, b));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_mat_mul_prime)->Arg(16)->Arg(64)->Arg(128)->Complexity();

void BM_rref_prime(benchmark::State& state) {
    PrimeField f(101);
    const int n = static_cast<int>(state.range(0));
    auto a = random_square(f, n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref_rank_kernel(f, a, true));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_rref_prime)->Arg(16)->Arg(64)->Arg(128)->Complexity();

void BM_rref_rational(benchmark::State& state) {
    RationalField f;
    const int n = static_cast<int>(state.range(0));
    auto a = random_square(f, n, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref_rank_kernel(f, a, true));
    }
}
BENCHMARK(BM_rref_rational)->Arg(8)->Arg(16)->Arg(32);

void BM_span_insert(benchmark::State& state) {
    PrimeField f(101);
    const int dim = static_cast<int>(state.range(0));
    DetRng rng(5);
    std::vector<std::vector<PrimeField::Elem>> vecs;
    for (int k = 0; k < dim; ++k) {
        std::vector<PrimeField::Elem> v(static_cast<size_t>(dim));
        for (auto& x : v) x = f.from_int(static_cast<std::int64_t>(rng.below(101)));
        vecs.push_back(std::move(v));
    }
    for (auto _ : state) {
        RrefBasis<PrimeField> basis(f, dim);
        for (const auto& v : vecs) basis.insert(v);
        benchmark::DoNotOptimize(basis.rank());
    }
}
BENCHMARK(BM_span_insert)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
