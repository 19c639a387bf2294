#include <benchmark/benchmark.h>

#include <random>

#include "hbn/hbn.hpp"

namespace {

hbn::Natural random_nat(std::mt19937_64& rng, int bits) {
    hbn::Natural n = 0;
    for (int b = 0; b < bits; b += 64) n = (n << 64) | rng();
    return n;
}

void BM_succ_sweep(benchmark::State& state) {
    for (auto _ : state) {
        hbn::Num x;
        for (int i = 0; i < state.range(0); ++i) x = hbn::succ(x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_succ_sweep)->Arg(1 << 10)->Arg(1 << 14);

void BM_add_dense(benchmark::State& state) {
    std::mt19937_64 rng(1);
    hbn::Num a = hbn::from_natural(random_nat(rng, state.range(0)));
    hbn::Num b = hbn::from_natural(random_nat(rng, state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hbn::add(a, b));
}
BENCHMARK(BM_add_dense)->Arg(256)->Arg(4096);

void BM_add_tower(benchmark::State& state) {
    hbn::Num a = hbn::best_case(hbn::from_natural(20));
    hbn::Num b = hbn::best_case(hbn::from_natural(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hbn::add(a, b));
}
BENCHMARK(BM_add_tower)->Arg(30)->Arg(100);

void BM_mul_tower(benchmark::State& state) {
    hbn::Num a = hbn::succ(hbn::best_case(hbn::from_natural(30)));
    hbn::Num b = hbn::succ(hbn::best_case(hbn::from_natural(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(hbn::mul(a, b));
}
BENCHMARK(BM_mul_tower)->Arg(40);

void BM_cmp_dense(benchmark::State& state) {
    std::mt19937_64 rng(2);
    hbn::Num a = hbn::from_natural(random_nat(rng, state.range(0)));
    hbn::Num b = hbn::from_natural(random_nat(rng, state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hbn::cmp(a, b));
}
BENCHMARK(BM_cmp_dense)->Arg(256)->Arg(4096);

void BM_exp2_giant(benchmark::State& state) {
    hbn::Num p = hbn::from_natural(57885161);
    for (auto _ : state)
        benchmark::DoNotOptimize(hbn::bitsize(hbn::pred(hbn::exp2(p))));
}
BENCHMARK(BM_exp2_giant);

void BM_from_natural(benchmark::State& state) {
    std::mt19937_64 rng(3);
    hbn::Natural n = random_nat(rng, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hbn::from_natural(n));
}
BENCHMARK(BM_from_natural)->Arg(4096)->Arg(65536);

}  // namespace

BENCHMARK_MAIN();
