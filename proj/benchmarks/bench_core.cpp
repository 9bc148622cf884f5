#include <benchmark/benchmark.h>

#include "weylkac/cartan.hpp"
#include "weylkac/cgraph.hpp"
#include "weylkac/factor.hpp"
#include "weylkac/series.hpp"
#include "weylkac/weyl.hpp"

using namespace weylkac;

namespace {

CartanMatrix a2_affine() {
    return validate_gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
}

void BM_orbit_bfs_affine(benchmark::State& state) {
    CartanMatrix A = a2_affine();
    DominantWeight zero = DominantWeight::zero(3);
    const std::int64_t bound = state.range(0);
    for (auto _ : state) {
        auto nodes = orbit_bfs(A, zero, bound);
        benchmark::DoNotOptimize(nodes.size());
    }
}
BENCHMARK(BM_orbit_bfs_affine)->Arg(10)->Arg(20)->Arg(30);

void BM_numerator_mul(benchmark::State& state) {
    CartanMatrix A = a2_affine();
    const std::int64_t bound = state.range(0);
    TruncatedSeries u1 = numerator(A, DominantWeight({1, 0, 0}), bound);
    TruncatedSeries u2 = numerator(A, DominantWeight({0, 1, 1}), bound);
    for (auto _ : state) {
        TruncatedSeries p = mul(u1, u2);
        benchmark::DoNotOptimize(p.term_count());
    }
}
BENCHMARK(BM_numerator_mul)->Arg(15)->Arg(25);

void BM_neg_log(benchmark::State& state) {
    CartanMatrix A = a2_affine();
    const std::int64_t bound = state.range(0);
    TruncatedSeries p =
        numerator_product(A, {DominantWeight({1, 0, 0}), DominantWeight({0, 1, 1})}, bound);
    for (auto _ : state) {
        TruncatedSeries l = neg_log(p);
        benchmark::DoNotOptimize(l.term_count());
    }
}
BENCHMARK(BM_neg_log)->Arg(15)->Arg(25);

void BM_factor_roundtrip(benchmark::State& state) {
    CartanMatrix A = a2_affine();
    WeightMultiset input{DominantWeight({1, 0, 0}), DominantWeight({0, 1, 1})};
    std::int64_t total = 0;
    for (const auto& w : input) total += deg_lambda(w);
    TruncatedSeries p = numerator_product(A, input, total);
    for (auto _ : state) {
        auto recovered = factorize_numerators(A, p, total);
        benchmark::DoNotOptimize(recovered.size());
    }
}
BENCHMARK(BM_factor_roundtrip);

void BM_c_direct_7(benchmark::State& state) {
    DynkinGraph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}, {1, 4}});
    for (auto _ : state) benchmark::DoNotOptimize(c_direct(g));
}
BENCHMARK(BM_c_direct_7);

void BM_c_dc_7(benchmark::State& state) {
    DynkinGraph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}, {1, 4}});
    for (auto _ : state) benchmark::DoNotOptimize(c_dc(g));
}
BENCHMARK(BM_c_dc_7);

} // namespace

BENCHMARK_MAIN();
