#include <fockcalc/fock.hpp>
#include <fockcalc/forms.hpp>
#include <fockcalc/numeric.hpp>
#include <fockcalc/parse.hpp>
#include <fockcalc/poly.hpp>
#include <fockcalc/quadrature.hpp>
#include <fockcalc/scalar.hpp>
#include <fockcalc/symbol.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace fockcalc;

// Dense analytic polynomial of the given degree with small distinct
// rational coefficients, so arithmetic cost is not dominated by zeros.
AnalyticPoly dense_poly(int degree) {
    AnalyticPoly f;
    for (int d = 0; d <= degree; ++d)
        f.add_term(d, GaussianRational(Rational(d + 1, 3), Rational(1, d + 2)));
    return f;
}

void BM_FallingRatio(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BigInt r = falling_ratio(s, s / 2);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_FallingRatio)->Arg(16)->Arg(64)->Arg(256);

void BM_InnerProduct(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    AnalyticPoly f = dense_poly(degree);
    AnalyticPoly g = dense_poly(degree);
    FockParams fp{1};
    for (auto _ : state) {
        PiScalar v = inner_product(f, g, fp);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_InnerProduct)->Arg(8)->Arg(32)->Arg(64);

void BM_ToeplitzApply(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    MixedSymbol phi = parse_symbol("z*zb^3 + z^2*zb");
    AnalyticPoly f = dense_poly(degree);
    FockParams fp{1};
    for (auto _ : state) {
        AnalyticPoly out = toeplitz_apply(phi, f, fp);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_ToeplitzApply)->Arg(8)->Arg(32)->Arg(64);

void BM_HyponormalityForm(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    MixedSymbol phi = parse_symbol("4*z^3*zb + 6*z*zb^4");
    AnalyticPoly f = dense_poly(degree);
    FockParams fp{1};
    for (auto _ : state) {
        PiScalar v = hyponormality_form(phi, f, fp);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HyponormalityForm)->Arg(8)->Arg(24);

void BM_CommutatorGram(benchmark::State& state) {
    const int truncation = static_cast<int>(state.range(0));
    MixedSymbol phi = parse_symbol("z*zb^3 + z^2*zb");
    FockParams fp{1};
    for (auto _ : state) {
        PiMatrix gram = commutator_gram(phi, truncation, fp);
        benchmark::DoNotOptimize(gram);
    }
}
BENCHMARK(BM_CommutatorGram)->Arg(4)->Arg(8)->Arg(12);

void BM_PsdTest(benchmark::State& state) {
    const int truncation = static_cast<int>(state.range(0));
    MixedSymbol phi = parse_symbol("z*zb^3 + z^2*zb");
    PiMatrix gram = commutator_gram(phi, truncation, FockParams{1});
    for (auto _ : state) {
        PSDVerdict v = psd_test(gram);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_PsdTest)->Arg(4)->Arg(8)->Arg(12);

void BM_GaussLaguerreRule(benchmark::State& state) {
    const int radial = static_cast<int>(state.range(0));
    for (auto _ : state) {
        QuadratureRule rule = gauss_laguerre_rule(radial, 2 * radial);
        benchmark::DoNotOptimize(rule);
    }
}
BENCHMARK(BM_GaussLaguerreRule)->Arg(16)->Arg(64)->Arg(128);

void BM_NumericInnerProduct(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    AnalyticPoly f = dense_poly(degree);
    AnalyticPoly g = dense_poly(degree);
    QuadratureRule rule = rule_for_pairing(degree, degree, 1);
    for (auto _ : state) {
        auto v = numeric_inner_product(f, g, 1, rule);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_NumericInnerProduct)->Arg(8)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
