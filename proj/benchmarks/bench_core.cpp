#include <benchmark/benchmark.h>

#include <random>

#include "hypwalls/domains.hpp"

using namespace hypwalls;

namespace {

MoebiusMatrix sample_matrix(std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    for (;;) {
        const Complex a{d(rng), d(rng)};
        if (std::abs(a) < 0.2) continue;
        const Complex b{d(rng), d(rng)}, c{d(rng), d(rng)};
        return {a, b, c, (1.0 + b * c) / a};
    }
}

void BM_psi(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const MoebiusMatrix m = sample_matrix(rng);
    for (auto _ : state) benchmark::DoNotOptimize(psi(m));
}
BENCHMARK(BM_psi);

void BM_bisector_ball(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const MoebiusMatrix m = sample_matrix(rng);
    for (auto _ : state) benchmark::DoNotOptimize(bisector_ball(m));
}
BENCHMARK(BM_bisector_ball);

void BM_act_half_space(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const MoebiusMatrix m = sample_matrix(rng);
    const HalfSpacePoint P{Complex{0.3, -0.2}, 0.8};
    for (auto _ : state) benchmark::DoNotOptimize(act_half_space(m, P));
}
BENCHMARK(BM_act_half_space);

void BM_enumerate_bianchi(benchmark::State& state) {
    const BianchiContext ctx = ring_ctx(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_bianchi(ctx, 20));
}
BENCHMARK(BM_enumerate_bianchi)->Arg(1)->Arg(7);

void BM_ideal_points(benchmark::State& state) {
    const BianchiContext ctx = ring_ctx(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ideal_points(ctx));
}
BENCHMARK(BM_ideal_points)->Arg(14)->Arg(39);

void BM_reduce_point(benchmark::State& state) {
    const BianchiContext ctx = ring_ctx(1);
    const DomainSpec dom = bianchi_domain(ctx, 10);
    GroupSpec spec;
    const HalfSpacePoint P{Complex{3.7, -2.1}, 0.05};
    for (auto _ : state) benchmark::DoNotOptimize(reduce_point(P, dom, spec, 256));
}
BENCHMARK(BM_reduce_point);

}  // namespace

BENCHMARK_MAIN();
