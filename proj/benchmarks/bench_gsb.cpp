#include <benchmark/benchmark.h>

#include "gsb/resolution.hpp"

namespace {

// long left-normal products give reduce_max plenty of rewriting to do
gsb::Poly hard_input(const gsb::MainExampleAlgebra& A, std::size_t len) {
    gsb::Poly p = A.one();
    for (std::size_t i = 0; i < len; ++i) p = p * (A.gen(i % 4) + A.one());
    return p;
}

void BM_reduce_max(benchmark::State& state) {
    gsb::MainExampleAlgebra A;
    gsb::Poly input = hard_input(A, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(A.nf(input));
}
BENCHMARK(BM_reduce_max)->Arg(6)->Arg(8)->Arg(10);

void BM_quotient_build(benchmark::State& state) {
    gsb::MainExampleAlgebra A;
    for (auto _ : state) {
        auto q = gsb::build_truncated_quotient(A.presentation(),
                                               static_cast<unsigned long>(state.range(0)));
        benchmark::DoNotOptimize(q.dim());
    }
}
BENCHMARK(BM_quotient_build)->Arg(3)->Arg(4)->Arg(5);

void BM_filtration_dims(benchmark::State& state) {
    gsb::MainExampleAlgebra A;
    auto q = gsb::build_truncated_quotient(A.presentation(),
                                           static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gsb::filtration_dims(q));
}
BENCHMARK(BM_filtration_dims)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
