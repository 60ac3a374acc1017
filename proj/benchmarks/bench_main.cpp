#include <benchmark/benchmark.h>

#include "radix/parser.hpp"
#include "radix/quadrature.hpp"
#include "radix/verifier.hpp"

using namespace radix;

namespace {

PolyC Y() { return PolyC::variable(); }

PolyC dense_poly(int degree, long seed)
{
    std::vector<Cplx> c;
    long v = seed;
    for (int i = 0; i <= degree; ++i) {
        v = (v * 48271) % 2147483647;
        c.emplace_back(Alg(Rat(v % 19 - 9, 1 + v % 4)));
    }
    if (c.back().is_zero())
        c.back() = Cplx(1);
    return PolyC(std::move(c));
}

void bm_poly_gcd(benchmark::State& state)
{
    int deg = int(state.range(0));
    PolyC common = dense_poly(deg / 2, 7);
    PolyC a = common * dense_poly(deg / 2, 11);
    PolyC b = common * dense_poly(deg / 2, 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(gcd(a, b));
}

void bm_classify(benchmark::State& state)
{
    RatFnC f1(Y() * (PolyC(Cplx(1)) + Y()));
    RatFnC f2(Y() * (PolyC(Cplx(1)) - Y()));
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(normalize({f1, f2})));
}

void bm_real_transformation(benchmark::State& state)
{
    RatFnC f1(Y() * (PolyC(Cplx(1)) + Y()));
    RatFnC f2(Y() * (PolyC(Cplx(1)) - Y()));
    RadicandCase c = analyze({f1, f2});
    for (auto _ : state) {
        Field F;
        benchmark::DoNotOptimize(
            unit_interval_transformation(c, Variant::RealUnitInterval, F));
    }
}

void bm_verify_inverse(benchmark::State& state)
{
    Field F;
    RatFnC f1(Y() * (PolyC(Cplx(1)) + Y()));
    RatFnC f2(Y() * (PolyC(Cplx(1)) - Y()));
    RadicandCase c = analyze({f1, f2});
    Transformation t = unit_interval_transformation(c, Variant::RealUnitInterval, F);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_inverse(t));
}

void bm_eval_word(benchmark::State& state)
{
    IntegralWord w = parse_word("H[0,{0,4},{0,4}; base=0]");
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_word(w, 0.7, 1e-10));
}

void bm_sum_rewrite(benchmark::State& state)
{
    SumExpr s = parse_sum("sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i)))");
    for (auto _ : state)
        benchmark::DoNotOptimize(to_generating_function(s));
}

void bm_shuffle(benchmark::State& state)
{
    IntegralWord u, v;
    u.letters = {Letter::rat(Cplx(-1)), Letter::rat(Cplx(2)), Letter::rat(Cplx(3))};
    v.letters = {Letter::rat(Cplx(-4)), Letter::rat(Cplx(5)), Letter::rat(Cplx(-6))};
    for (auto _ : state)
        benchmark::DoNotOptimize(shuffle(u, v));
}

}  // namespace

BENCHMARK(bm_poly_gcd)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_classify);
BENCHMARK(bm_real_transformation);
BENCHMARK(bm_verify_inverse);
BENCHMARK(bm_eval_word);
BENCHMARK(bm_sum_rewrite);
BENCHMARK(bm_shuffle);

BENCHMARK_MAIN();
