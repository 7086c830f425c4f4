// Microbenchmarks for the hot paths: the localization sum, the geometry
// searches, the semi-negativity scan, and rational-function normalization.

#include <benchmark/benchmark.h>

#include "equifix/catalog.hpp"
#include "equifix/ci.hpp"
#include "equifix/hcp.hpp"
#include "equifix/localization.hpp"
#include "equifix/ratfn.hpp"

using namespace equifix;

namespace {

void BM_EquivariantSignatureCP5(benchmark::State& state) {
    const FixedPointModel model = linear_cp(5);
    const BundleExpr twist = BundleExpr::one(1);
    for (auto _ : state) {
        auto f = equivariant_twisted_signature(model, twist);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_EquivariantSignatureCP5);

void BM_TwistedIndexCP3Tangent(benchmark::State& state) {
    const FixedPointModel model = linear_cp(3);
    const BundleExpr twist = BundleExpr::tangent(1);
    for (auto _ : state) {
        Rat v = nonequivariant_index(model, twist);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_TwistedIndexCP3Tangent);

void BM_HcpSearchDim4(benchmark::State& state) {
    for (auto _ : state) {
        auto r = enumerate_hcp_models(2);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_HcpSearchDim4)->Unit(benchmark::kMillisecond);

void BM_HcpSearchDim8(benchmark::State& state) {
    for (auto _ : state) {
        auto r = enumerate_hcp_models(4);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_HcpSearchDim8)->Unit(benchmark::kMillisecond);

void BM_SemiNegativeScan(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        auto r = scan_non_semi_negative(n);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SemiNegativeScan)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RatFnNormalize(benchmark::State& state) {
    // (lambda^2 - 1)^8 / (lambda - 1)^8 collapses to (lambda + 1)^8
    LaurentPoly num = LaurentPoly::one();
    LaurentPoly den = LaurentPoly::one();
    LaurentPoly a = LaurentPoly::monomial(2) - LaurentPoly::one();
    LaurentPoly b = LaurentPoly::monomial(1) - LaurentPoly::one();
    for (int i = 0; i < 8; ++i) {
        num = num * a;
        den = den * b;
    }
    for (auto _ : state) {
        RatFn f(num, den);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_RatFnNormalize);

}  // namespace

BENCHMARK_MAIN();
