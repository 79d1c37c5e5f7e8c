#include <benchmark/benchmark.h>

#include <random>

#include "suptor/class_invariants.hpp"
#include "suptor/curve_gate.hpp"
#include "suptor/cyclo_local.hpp"
#include "suptor/hermitian.hpp"
#include "suptor/int_poly.hpp"
#include "suptor/mat_local.hpp"

using namespace suptor;

namespace {

CycloElt random_elt(const RingCtx &ctx, std::mt19937_64 &rng) {
    std::vector<int> d(static_cast<std::size_t>(ctx.precision()));
    for (auto &x : d)
        x = static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.ell()));
    return CycloElt(ctx, d);
}

void BM_RingMul(benchmark::State &state) {
    const RingCtx ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    std::mt19937_64 rng(1);
    const CycloElt a = random_elt(ctx, rng), b = random_elt(ctx, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RingMul)->Args({3, 9})->Args({11, 10})->Args({31, 20});

void BM_RingInv(benchmark::State &state) {
    const RingCtx ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    std::mt19937_64 rng(2);
    std::vector<int> d(static_cast<std::size_t>(ctx.precision()));
    for (auto &x : d)
        x = static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.ell()));
    d[0] = 1;
    const CycloElt a(ctx, d);
    for (auto _ : state)
        benchmark::DoNotOptimize(ring_inv(a));
}
BENCHMARK(BM_RingInv)->Args({11, 10})->Args({31, 20});

void BM_RandomSuMember(benchmark::State &state) {
    const HermitianForm f = HermitianForm::standard(RingCtx(5, static_cast<int>(state.range(0))), 3, 1);
    std::mt19937_64 rng(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(random_su_member(f, rng));
}
BENCHMARK(BM_RandomSuMember)->Arg(4)->Arg(8);

void BM_Demjanenko(benchmark::State &state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(demjanenko_det(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}
BENCHMARK(BM_Demjanenko)->Args({11, 8})->Args({31, 20});

void BM_Discriminant(benchmark::State &state) {
    const IntPoly f = parse_poly("x^8+x+1");
    for (auto _ : state)
        benchmark::DoNotOptimize(discriminant(f));
}
BENCHMARK(BM_Discriminant);

void BM_GaloisCertificate(benchmark::State &state) {
    const IntPoly f = parse_poly("x^7-x-1");
    for (auto _ : state)
        benchmark::DoNotOptimize(galois_certificate(f));
}
BENCHMARK(BM_GaloisCertificate);

} // namespace

BENCHMARK_MAIN();
