#include <benchmark/benchmark.h>

#include "shiftlab/families.hpp"
#include "shiftlab/kernel.hpp"
#include "shiftlab/lp.hpp"
#include "shiftlab/polynomial.hpp"
#include "shiftlab/spectra.hpp"
#include "shiftlab/truncation.hpp"

using namespace shiftlab;

static void BM_LatticeTruncation(benchmark::State& state) {
    const auto family = make_lattice(2);
    for (auto _ : state) {
        Truncation t(family, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(t.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LatticeTruncation)->Range(16, 256)->Complexity();

static void BM_ApplyShift(benchmark::State& state) {
    auto trunc = std::make_shared<const Truncation>(make_lattice(2), static_cast<int>(state.range(0)));
    LpFunction f = ball_indicator(trunc, trunc->radius() - 1);
    for (auto _ : state) {
        auto image = apply_shift(f);
        benchmark::DoNotOptimize(image.validity_radius);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplyShift)->Range(16, 256)->Complexity();

static void BM_CombPolynomial(benchmark::State& state) {
    for (auto _ : state) {
        auto h = comb_polynomial(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(h.degree());
    }
}
BENCHMARK(BM_CombPolynomial)->Arg(10)->Arg(20)->Arg(30);

static void BM_CombRoots(benchmark::State& state) {
    const auto h = comb_polynomial(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto roots = roots_in_open_interval(h, 0.0, 1.0);
        benchmark::DoNotOptimize(roots.size());
    }
}
BENCHMARK(BM_CombRoots)->Arg(6)->Arg(14)->Arg(30);

static void BM_InductiveKernel(benchmark::State& state) {
    const auto tree = make_tree(AlternatingTreeSpec{2, 4});
    for (auto _ : state) {
        auto f = inductive_kernel(tree, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(f.support_radius());
    }
}
BENCHMARK(BM_InductiveKernel)->Arg(4)->Arg(8);

static void BM_KiteSpectrum(benchmark::State& state) {
    for (auto _ : state) {
        auto s = full_spectrum(TailGraphKind::Kite, static_cast<int>(state.range(0)), 40);
        benchmark::DoNotOptimize(s.point.size());
    }
}
BENCHMARK(BM_KiteSpectrum)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
