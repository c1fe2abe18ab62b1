#include <benchmark/benchmark.h>

#include <hankel/euclid.hpp>
#include <hankel/hankel_dets.hpp>
#include <hankel/polynomial.hpp>
#include <hankel/prime_field.hpp>

#include <random>
#include <vector>

namespace {

using namespace hankel;

Poly<Fp> random_poly(std::mt19937_64& rng, int deg, std::uint64_t p) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, p - 1);
    std::vector<Fp> c;
    c.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) c.emplace_back(dist(rng), p);
    c.emplace_back(nonzero(rng), p);
    return Poly<Fp>(std::move(c));
}

void BM_poly_mul_gfp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    const Poly<Fp> a = random_poly(rng, n, kDefaultPrime);
    const Poly<Fp> b = random_poly(rng, n, kDefaultPrime);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(n);
}
BENCHMARK(BM_poly_mul_gfp)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_half_gcd_gfp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    const Poly<Fp> f0 = random_poly(rng, n, kDefaultPrime);
    const Poly<Fp> f1 = random_poly(rng, n - 1, kDefaultPrime);
    for (auto _ : state) benchmark::DoNotOptimize(half_gcd_quotients(f0, f1, n));
    state.SetComplexityN(n);
}
BENCHMARK(BM_half_gcd_gfp)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_classical_chain_gfp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    const Poly<Fp> f0 = random_poly(rng, n, kDefaultPrime);
    const Poly<Fp> f1 = random_poly(rng, n - 1, kDefaultPrime);
    for (auto _ : state) benchmark::DoNotOptimize(sturm_chain_classical(f0, f1));
    state.SetComplexityN(n);
}
BENCHMARK(BM_classical_chain_gfp)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_comp_hd_pipeline_gfp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(13);
    const Poly<Fp> f0 = random_poly(rng, n, kDefaultPrime);
    const Poly<Fp> f1 = random_poly(rng, n - 1, kDefaultPrime);
    for (auto _ : state) {
        const QuotientSequence<Fp> q = half_gcd_quotients(f0, f1, n);
        benchmark::DoNotOptimize(dets_from_quotients(q, n));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_comp_hd_pipeline_gfp)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
