#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radix/quadrature.hpp"
#include "radix/words.hpp"

using namespace radix;

namespace {

PolyC Y() { return PolyC::variable(); }

IntegralWord word(std::vector<Letter> ls, int base)
{
    IntegralWord w;
    w.letters = std::move(ls);
    w.basePoint = base;
    return w;
}

Transformation flagship(Field& F)
{
    RatFnC f1(Y() * (PolyC(Cplx(1)) + Y()));
    RatFnC f2(Y() * (PolyC(Cplx(1)) - Y()));
    RadicandCase c = analyze({f1, f2});
    return unit_interval_transformation(c, Variant::RealUnitInterval, F);
}

IntegralWord flagship_word()
{
    // 1/t, 1/(sqrt(t) sqrt(1+t)) twice, 1/(sqrt(t) sqrt(1-t)), from 1 down to x
    return word({Letter::rat(Cplx(0)), Letter::sqrt_set({Cplx(0), Cplx(-1)}),
                 Letter::sqrt_set({Cplx(0), Cplx(-1)}), Letter::sqrt_set({Cplx(0), Cplx(1)})},
                1);
}

long binom(int n, int k)
{
    long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("letter construction and sign constants")
{
    CHECK(sign_constant(Cplx(0), 0) == 1);
    CHECK(sign_constant(Cplx(2), 0) == -1);
    CHECK(sign_constant(Cplx(-3), 0) == 1);
    CHECK(sign_constant(Cplx(1), 1) == -1);
    CHECK(sign_constant(Cplx(0), 1) == 1);
    CHECK(sign_constant(Cplx(4), 1) == -1);
    CHECK(sign_constant(Cplx(Alg(0), Alg(1)), 0) == 1);

    CHECK(Letter::sqrt_set({Cplx(4), Cplx(0)}) == Letter::sqrt_set({Cplx(0), Cplx(4)}));
    CHECK_THROWS_AS(Letter::sqrt_set({Cplx(0)}), usage_error);
    CHECK_THROWS_AS(Letter::sqrt_set({Cplx(0), Cplx(0)}), usage_error);
    CHECK_THROWS_AS(Letter::rat_times_sqrt(Cplx(1), {Cplx(1), Cplx(2)}), usage_error);
    CHECK_THROWS_AS(Letter::power_times_sqrt({Cplx(0), Cplx(1)}, 1), usage_error);
    CHECK_NOTHROW(Letter::power_times_sqrt({Cplx(0), Cplx(1), Cplx(2)}, 1));

    // squares carry the sign constants
    CHECK(Letter::rat(Cplx(2)).squared(0) ==
          RatFnC(PolyC(Cplx(1)), PolyC::linear(Cplx(2)) * PolyC::linear(Cplx(2))));
    CHECK(Letter::sqrt_set({Cplx(0), Cplx(4)}).squared(0) ==
          RatFnC(PolyC(Cplx(-1)), Y() * PolyC::linear(Cplx(4))));

    CHECK(base_half_order(Letter::rat(Cplx(0)), 0) == 2);
    CHECK(base_half_order(Letter::sqrt_set({Cplx(0), Cplx(4)}), 0) == 1);
    CHECK(base_half_order(Letter::sqrt_set({Cplx(0), Cplx(4)}), 1) == 0);
    CHECK(base_half_order(Letter::generic(RatFnC(PolyC(Cplx(1)), Y() * Y())), 0) == 4);
}

TEST_CASE("shuffle: structure and counts")
{
    Letter a = Letter::rat(Cplx(-1)), b = Letter::rat(Cplx(2)), c = Letter::rat(Cplx(3));
    Letter d = Letter::rat(Cplx(-4));

    WordCombination ab = shuffle(word({a}, 0), word({b}, 0));
    REQUIRE(ab.terms.size() == 2);
    for (const auto& [co, w] : ab.terms)
        CHECK(co == Alg(1));

    WordCombination abc = shuffle(word({a}, 0), word({b, c}, 0));
    CHECK(abc.terms.size() == 3);

    CHECK(shuffle(word({a, b}, 0), word({c, d}, 0)).terms.size() == 6);
    CHECK(shuffle(word({a, b, c}, 0), word({d, Letter::rat(Cplx(5)), Letter::rat(Cplx(6))}, 0))
              .terms.size() == binom(6, 3));

    // commutative
    WordCombination ba = shuffle(word({b}, 0), word({a}, 0));
    for (const auto& [co, w] : ba.terms) {
        bool found = false;
        for (const auto& [co2, w2] : ab.terms)
            found = found || (w.same_shape(w2) && co == co2);
        CHECK(found);
    }

    // associative
    WordCombination left, right;
    for (const auto& [co, w] : shuffle(word({a}, 0), word({b}, 0)).terms)
        for (const auto& [co2, w2] : shuffle(w, word({c}, 0)).terms)
            left.add(co * co2, w2);
    for (const auto& [co, w] : shuffle(word({b}, 0), word({c}, 0)).terms)
        for (const auto& [co2, w2] : shuffle(word({a}, 0), w).terms)
            right.add(co * co2, w2);
    REQUIRE(left.terms.size() == right.terms.size());
    for (const auto& [co, w] : left.terms) {
        bool found = false;
        for (const auto& [co2, w2] : right.terms)
            found = found || (w.same_shape(w2) && co == co2);
        CHECK(found);
    }

    // repeated letters merge with multiplicity
    WordCombination aa = shuffle(word({a}, 0), word({a}, 0));
    REQUIRE(aa.terms.size() == 1);
    CHECK(aa.terms[0].first == Alg(2));

    CHECK_THROWS_AS(shuffle(word({a}, 0), word({b}, 1)), usage_error);
    CHECK_THROWS_AS(
        shuffle(word({Letter::generic(RatFnC(PolyC(Cplx(1)), Y() * Y()))}, 0), word({b}, 0)),
        usage_error);
}

TEST_CASE("transform_word: flagship nested integral")
{
    Field F;
    Transformation t = flagship(F);
    IntegralWord w = flagship_word();
    IntegralWord tw = transform_word(w, t, F);

    REQUIRE(tw.letters.size() == 4);
    CHECK(tw.basePoint == 1);

    Alg sqrt2 = F.sqrt(Alg(2));
    CHECK(tw.prefactor == Alg(32) * sqrt2);

    PolyC one(Cplx(1)), u2 = Y() * Y(), u4 = u2 * u2;
    RatFnC l1(one - u4, Y() * (u4 + one));
    RatFnC l23(one - u2, u4 + one);
    RatFnC l4(one + u2, u4 + one);
    CHECK(tw.letters[0].fn() == l1);
    CHECK(tw.letters[1].fn() == l23);
    CHECK(tw.letters[2].fn() == l23);
    CHECK(tw.letters[3].fn() == l4);
}

TEST_CASE("transform_word: rational letter and edge cases")
{
    Field F;
    RadicandCase c = analyze({RatFnC(Y())});
    Transformation t = general_transformation(c, F);  // g = y^2

    IntegralWord w = word({Letter::rat(Cplx(3))}, 0);
    IntegralWord tw = transform_word(w, t, F);
    REQUIRE(tw.letters.size() == 1);
    RatFnC expected = compose(RatFnC(PolyC(Cplx(-1)), PolyC::linear(Cplx(3))), t.g) *
                      t.g.derivative();
    CHECK(RatFnC(Cplx(tw.prefactor)) * tw.letters[0].fn() == expected);
    // d(y^2)/(y^2 - 3), up to the sign constant
    CHECK(RatFnC(Cplx(-tw.prefactor)) * tw.letters[0].fn() ==
          RatFnC(Cplx(2) * Y(), Y() * Y() - PolyC(Cplx(3))));

    IntegralWord empty = word({}, 0);
    empty.prefactor = Alg(7);
    IntegralWord te = transform_word(empty, t, F);
    CHECK(te.letters.empty());
    CHECK(te.prefactor == Alg(7));

    CHECK_THROWS_WITH_AS(
        transform_word(word({Letter::sqrt_set({Cplx(1), Cplx(2)})}, 0), t, F),
        doctest::Contains("not rationalized"), usage_error);

    CHECK_THROWS_AS(transform_word(word({Letter::rat(Cplx(3))}, 1), t, F), usage_error);
}

TEST_CASE("partial fractions")
{
    PolyC one(Cplx(1)), u2 = Y() * Y(), u4 = u2 * u2;

    // first flagship letter: simple pole at 0 plus cyclotomic remainder
    IntegralWord w =
        word({Letter::generic(RatFnC(one - u4, Y() * (u4 + one)))}, 1);
    IntegralWord pw = partial_fraction_letters(w);
    REQUIRE(pw.letters[0].decomposition.has_value());
    const PartialFractions& pf = *pw.letters[0].decomposition;
    REQUIRE(pf.simple.size() == 1);
    CHECK(pf.simple[0].first == Cplx(0));
    CHECK(pf.simple[0].second == Cplx(1));
    CHECK(pf.remainder == RatFnC(Cplx(-2) * (u2 * Y()), u4 + one));

    // resum invariant
    RatFnC resum = pf.remainder;
    for (const auto& [a, cc] : pf.simple)
        resum = resum + RatFnC(PolyC(cc), PolyC::linear(a));
    CHECK(resum == w.letters[0].fn());

    // 2y/(y^2-4) over Q: two simple poles, no remainder
    IntegralWord w2 = word({Letter::generic(RatFnC(Cplx(2) * Y(), u2 - PolyC(Cplx(4))))}, 0);
    IntegralWord pw2 = partial_fraction_letters(w2);
    REQUIRE(pw2.letters[0].decomposition.has_value());
    const PartialFractions& pf2 = *pw2.letters[0].decomposition;
    REQUIRE(pf2.simple.size() == 2);
    CHECK(pf2.remainder.is_zero());
    for (const auto& [a, cc] : pf2.simple) {
        CHECK((a == Cplx(2) || a == Cplx(-2)));
        CHECK(cc == Cplx(1));
    }

    // single reciprocal linear factor becomes a Rat letter
    IntegralWord w3 = word({Letter::generic(RatFnC(one, PolyC::linear(Cplx(3))))}, 0);
    IntegralWord pw3 = partial_fraction_letters(w3);
    CHECK(pw3.letters[0].kind() == Letter::Kind::Rat);
    CHECK(pw3.letters[0].pole() == Cplx(3));
    CHECK(pw3.prefactor == Alg(-1));

    // roots in a quadratic extension, with coefficients living in that tower
    Field F;
    Alg s2 = F.sqrt(Alg(2));
    IntegralWord w4 = word({Letter::generic(RatFnC(one, u2 - PolyC(Cplx(s2 * s2))))}, 0);
    IntegralWord pw4 = partial_fraction_letters(w4);
    REQUIRE(pw4.letters[0].decomposition.has_value());
    CHECK(pw4.letters[0].decomposition->simple.size() == 2);
    CHECK(pw4.letters[0].decomposition->remainder.is_zero());

    // expansion into a combination
    WordCombination ex = expand_partial_fractions(pw2);
    REQUIRE(ex.terms.size() == 2);
    for (const auto& [co, u] : ex.terms) {
        REQUIRE(u.letters.size() == 1);
        CHECK(u.letters[0].kind() == Letter::Kind::Rat);
        if (u.letters[0].pole() == Cplx(2))
            CHECK(co == Alg(-1));
        else
            CHECK(co == Alg(1));
    }
}

TEST_CASE("eval_word: closed-form oracles")
{
    // H_{{0,4}}(x) = arccos(1 - x/2)
    IntegralWord arc = word({Letter::sqrt_set({Cplx(0), Cplx(4)})}, 0);
    CHECK(std::abs(eval_word(arc, 1.0) - std::numbers::pi / 3.0) < 1e-10);
    CHECK(std::abs(eval_word(arc, 0.5) - std::acos(0.75)) < 1e-10);
    CHECK(std::abs(eval_word(arc, 0.125) - std::acos(1 - 0.0625)) < 1e-10);

    IntegralWord lg = word({Letter::rat(Cplx(-1))}, 0);
    CHECK(std::abs(eval_word(lg, 0.5) - std::log(1.5)) < 1e-10);

    // base point 1: integral of 1/(2-t) from x to 1
    IntegralWord lg1 = word({Letter::rat(Cplx(2))}, 1);
    CHECK(std::abs(eval_word(lg1, 0.5) - std::log(1.5)) < 1e-10);

    // depth 2 with logarithmic outer letter: H_{0,-1}(x) = Li2(-x) + ln(x)ln(1+x)
    // via integral of ln(1+t)/t
    IntegralWord li2 = word({Letter::rat(Cplx(0)), Letter::rat(Cplx(-1))}, 0);
    double x = 0.5, li2ref = 0;
    for (int n = 1; n < 200; ++n)
        li2ref -= std::pow(-x, n) / (n * n);
    CHECK(std::abs(eval_word(li2, x) - li2ref) < 1e-10);

    // prefactor scales the value
    IntegralWord scaled = lg;
    scaled.prefactor = Alg(3);
    CHECK(std::abs(eval_word(scaled, 0.5) - 3 * std::log(1.5)) < 1e-10);

    // empty word is the constant 1
    CHECK(eval_word(word({}, 0), 0.7) == 1.0);

    CHECK_THROWS_AS(eval_word(word({Letter::rat(Cplx(0))}, 0), 0.5), divergence_error);
    CHECK_THROWS_AS(
        eval_word(word({Letter::sqrt_set({Cplx(0), Cplx(4)}), Letter::rat(Cplx(0))}, 0), 0.5),
        divergence_error);
    CHECK_THROWS_AS(eval_word(lg, 0.0), domain_error);
    CHECK_THROWS_AS(eval_word(lg, 1.5), domain_error);
}

TEST_CASE("eval_word: shuffle identity numerically")
{
    IntegralWord u = word({Letter::rat(Cplx(-1))}, 0);
    IntegralWord v = word({Letter::rat(Cplx(2)), Letter::rat(Cplx(-3))}, 0);
    WordCombination sh = shuffle(u, v);
    for (double x : {0.25, 0.5, 0.75}) {
        double lhs = eval_word(u, x) * eval_word(v, x);
        double rhs = 0;
        for (const auto& [co, t] : sh.terms)
            rhs += co.to_double() * eval_word(t, x);
        CHECK(std::abs(lhs - rhs) < 1e-8);
    }
}

TEST_CASE("eval_word: change of variable agrees")
{
    Field F;
    Transformation t = flagship(F);
    IntegralWord w = flagship_word();
    IntegralWord tw = transform_word(w, t, F);
    for (double x : {0.3, 0.6, 0.85}) {
        double y = (std::sqrt(1 + x) - std::sqrt(1 - x)) / (std::sqrt(2.0) * std::sqrt(x));
        CHECK(std::abs(eval_word(w, x) - eval_word(tw, y)) < 1e-8);
    }
}
