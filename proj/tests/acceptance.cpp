// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses only public interfaces.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "radix/parser.hpp"
#include "radix/quadrature.hpp"
#include "radix/verifier.hpp"

using namespace radix;

namespace {

int failures = 0;

struct Crit {
    bool ok = true;
    std::string note;
    void check(bool c, const std::string& what)
    {
        if (!c && ok) {
            ok = false;
            note = what;
        }
    }
};

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(int n, const Crit& c, const std::string& desc, double secs)
{
    if (c.ok) {
        std::printf("criterion %d: PASS  %s (%.2f s)\n", n, desc.c_str(), secs);
    } else {
        std::printf("criterion %d: FAIL  %s: %s (%.2f s)\n", n, desc.c_str(), c.note.c_str(),
                    secs);
        ++failures;
    }
}

PolyC Y() { return PolyC::variable(); }

PolyC from_roots(const std::vector<Cplx>& roots)
{
    PolyC p(Cplx(1));
    for (const Cplx& r : roots)
        p = p * PolyC::linear(r);
    return p;
}

IntegralWord word(std::vector<Letter> ls, int base)
{
    IntegralWord w;
    w.letters = std::move(ls);
    w.basePoint = base;
    return w;
}

Transformation flagship(Field& F, RadicandSet* R = nullptr)
{
    RatFnC f1(Y() * (PolyC(Cplx(1)) + Y()));
    RatFnC f2(Y() * (PolyC(Cplx(1)) - Y()));
    RadicandCase c = analyze({f1, f2}, R);
    return unit_interval_transformation(c, Variant::RealUnitInterval, F);
}

IntegralWord flagship_word()
{
    return word({Letter::rat(Cplx(0)), Letter::sqrt_set({Cplx(0), Cplx(-1)}),
                 Letter::sqrt_set({Cplx(0), Cplx(-1)}), Letter::sqrt_set({Cplx(0), Cplx(1)})},
                1);
}

Rat rand_rat(std::mt19937& rng)
{
    long num = long(rng() % 13) - 6;
    long den = 1 + long(rng() % 2);
    return Rat(num, den);
}

Rat rand_outside_unit(std::mt19937& rng)
{
    Rat q = rand_rat(rng);
    if (q > 0 && q < 1)
        q = q - 1;
    if (q == 0 || q == 1)
        q = rng() % 2 ? Rat(-2) : Rat(2);
    return q;
}

Cplx rand_nonreal(std::mt19937& rng)
{
    Rat re = rand_rat(rng);
    Rat im = rand_rat(rng);
    if (im == 0)
        im = 1;
    return Cplx(Alg(re), Alg(im));
}

long binom(int n, int k)
{
    long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

// 1. Flagship symbolic run: g, inverse, images, and the transformed word.
void criterion1()
{
    auto t0 = clock_type::now();
    Crit c;

    Field F;
    Transformation t = flagship(F);
    Alg s2 = F.sqrt(Alg(2));

    // g = 2y^2/(y^4 + 1)
    c.check(t.g == RatFnC(Cplx(2) * (Y() * Y()),
                          PolyC(std::vector<Cplx>{Cplx(1), Cplx(0), Cplx(0), Cplx(0), Cplx(1)})),
            "g mismatch");

    // inverse (sqrt(1+x) - sqrt(1-x))/(sqrt(2) sqrt(x)), written over the
    // context radicands x(1+x), x(1-x) as (sqrt(x+x^2) - sqrt(x-x^2))/(sqrt(2) x)
    PolyC f1(std::vector<Cplx>{Cplx(0), Cplx(1), Cplx(1)});
    PolyC f2(std::vector<Cplx>{Cplx(0), Cplx(1), Cplx(-1)});
    int i1 = -1, i2 = -1;
    for (size_t k = 0; k < t.ctx->radicands.size(); ++k) {
        if (t.ctx->radicands[k] == f1)
            i1 = int(k);
        if (t.ctx->radicands[k] == f2)
            i2 = int(k);
    }
    c.check(i1 >= 0 && i2 >= 0, "context lacks the radicands x(1+x), x(1-x)");
    if (i1 >= 0 && i2 >= 0) {
        RatFnC coeff(PolyC(Cplx(s2 / Alg(2))), Y());
        SqrtExprC expected = SqrtExprC::monomial(t.ctx, 1u << i1, coeff) +
                             SqrtExprC::monomial(t.ctx, 1u << i2, -coeff);
        c.check(t.gInverse == expected, "inverse mismatch");
    }

    // images sqrt(x(1 -+ x)) -> sqrt(2) y (1 -+ y^2)/(y^4 + 1)
    PolyC den(std::vector<Cplx>{Cplx(1), Cplx(0), Cplx(0), Cplx(0), Cplx(1)});
    RatFnC plus(Cplx(s2) * (Y() * (PolyC(Cplx(1)) + Y() * Y())), den);
    RatFnC minus(Cplx(s2) * (Y() * (PolyC(Cplx(1)) - Y() * Y())), den);
    bool has_plus = false, has_minus = false;
    for (const RatFnC& im : t.sqrtImages) {
        has_plus = has_plus || im == plus || im == -plus;
        has_minus = has_minus || im == minus || im == -minus;
    }
    c.check(has_plus && has_minus, "square-root images mismatch");

    // transformed 4-letter word: prefactor 32 sqrt(2) and four rational letters
    IntegralWord tw = transform_word(flagship_word(), t, F);
    c.check(tw.prefactor == Alg(32) * s2, "prefactor mismatch");
    c.check(tw.letters.size() == 4, "letter count mismatch");
    if (tw.letters.size() == 4) {
        PolyC one(Cplx(1)), u2 = Y() * Y(), u4 = u2 * u2;
        RatFnC l1(one - u4, Y() * (u4 + one));
        RatFnC l23(one - u2, u4 + one);
        RatFnC l4(one + u2, u4 + one);
        for (const Letter& l : tw.letters)
            c.check(l.kind() == Letter::Kind::GenericRational && !l.str().empty(),
                    "transformed letter is not a printable rational letter");
        c.check(tw.letters[0].fn() == l1 && tw.letters[1].fn() == l23 &&
                    tw.letters[2].fn() == l23 && tw.letters[3].fn() == l4,
                "transformed letters mismatch");
    }

    double secs = seconds_since(t0);
    c.check(secs < 1.0, "runtime over 1 s");
    report(1, c, "flagship symbolic transformation, inverse, images, word", secs);
}

// 2. Flagship numeric cross-check: original vs transformed nested integral.
void criterion2()
{
    auto t0 = clock_type::now();
    Crit c;

    Field F;
    Transformation t = flagship(F);
    IntegralWord w = flagship_word();
    IntegralWord tw = transform_word(w, t, F);
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        double y = (std::sqrt(1 + x) - std::sqrt(1 - x)) / (std::sqrt(2.0) * std::sqrt(x));
        double diff = std::abs(eval_word(w, x, 1e-10) - eval_word(tw, y, 1e-10));
        c.check(diff < 1e-8, "integrals differ by " + std::to_string(diff) + " at x = " +
                                 std::to_string(x));
    }

    double secs = seconds_since(t0);
    c.check(secs < 30.0, "runtime over 30 s");
    report(2, c, "flagship numeric agreement at five points", secs);
}

// 3. Sum pipeline: the double sum rewrites to the expected two words.
void criterion3()
{
    auto t0 = clock_type::now();
    Crit c;

    SumExpr s = parse_sum("sum(x^n * inv(n^2*binom(2n,n)) * S(inv(i)))");
    WordCombination combo = to_generating_function(s);

    IntegralWord w1 = parse_word("H[0,{0,4},{0,4}; base=0]");
    IntegralWord w2 = parse_word("H[{0,4},4,{0,4}; base=0]");
    c.check(combo.terms.size() == 2, "expected exactly two words");
    bool f1 = false, f2 = false;
    for (const auto& [coeff, w] : combo.terms) {
        f1 = f1 || (coeff == Alg(1) && w.same_shape(w1));
        f2 = f2 || (coeff == Alg(1) && w.same_shape(w2));
    }
    c.check(f1 && f2, "word combination mismatch");

    // 200-term direct summation at x = 0.2
    double x = 0.2, direct = 0, harmonic = 0, central = 1;
    for (int n = 1; n <= 200; ++n) {
        central = central * (2.0 * n - 1) / n * 2;  // binom(2n,n) iteratively
        harmonic += 1.0 / n;
        direct += std::pow(x, n) / (double(n) * n * central) * harmonic;
    }
    double value = 0;
    for (const auto& [coeff, w] : combo.terms)
        value += coeff.to_double() * eval_word(w, x, 1e-10);
    c.check(std::abs(value - direct) < 1e-6,
            "series check off by " + std::to_string(std::abs(value - direct)));

    report(3, c, "double sum rewrites to two words, 200-term series agrees", seconds_since(t0));
}

// 4. Closed form: the single sqrt-set word equals arccos(1 - x/2).
void criterion4()
{
    auto t0 = clock_type::now();
    Crit c;

    IntegralWord w = word({Letter::sqrt_set({Cplx(0), Cplx(4)})}, 0);
    for (int k = 1; k <= 9; ++k) {
        double x = k / 9.0;
        double diff = std::abs(eval_word(w, x, 1e-12) - std::acos(1 - x / 2));
        c.check(diff < 1e-10,
                "off by " + std::to_string(diff) + " at x = " + std::to_string(x));
    }

    report(4, c, "sqrt-set word matches arccos(1 - x/2) on a 9-point grid", seconds_since(t0));
}

// 5 + 6. Catalog sweep over every family with 50 randomized admissible draws,
// verifying exactly; degrees collected for the minimality table.
Crit crit6;

void sweep_check(Crit& c, const Transformation& t, const RadicandSet& R, int want_degree,
                 const std::string& fam)
{
    if (!verify_rationalizes(t, R).pass)
        c.check(false, fam + ": verify_rationalizes failed");
    if (!verify_inverse(t).pass)
        c.check(false, fam + ": verify_inverse failed");
    if (t.variant == Variant::General) {
        if (!verify_puiseux_branch(t))
            c.check(false, fam + ": Puiseux branch check failed");
    } else if (!verify_unit_interval_bijection(t).pass) {
        c.check(false, fam + ": bijection certificate failed");
    }
    crit6.check(t.g.degree() == want_degree,
                fam + ": degree " + std::to_string(t.g.degree()) + ", expected " +
                    std::to_string(want_degree));
}

int general_degree(CaseTag tag)
{
    return tag == CaseTag::OneLinear || tag == CaseTag::OneQuadratic ? 2 : 4;
}

void criterion5()
{
    auto t0 = clock_type::now();
    Crit c;
    const int draws = 50;
    std::mt19937 rng(20260824);
    auto lin = [](const Cplx& a) { return RatFnC(PolyC::linear(a)); };

    // four general sub-case families
    for (int family = 0; family < 4 && c.ok; ++family) {
        for (int d = 0; d < draws && c.ok; ++d) {
            Cplx a1{Alg(rand_rat(rng))}, a2{Alg(rand_rat(rng))}, a3{Alg(rand_rat(rng))};
            if (a1 == a2)
                a2 += Cplx(7);
            if (a3 == a1 || a3 == a2)
                a3 += Cplx(13);
            std::vector<RatFnC> fs;
            CaseTag want = CaseTag::Empty;
            switch (family) {
                case 0:
                    fs = {lin(a1)};
                    want = CaseTag::OneLinear;
                    break;
                case 1: {
                    Cplx c0{Alg(rand_rat(rng))}, c1{Alg(rand_rat(rng))};
                    if ((c1 * c1 - Cplx(4) * c0).is_zero())
                        c0 += Cplx(5);
                    fs = {RatFnC(PolyC(std::vector<Cplx>{c0, c1, Cplx(1)}))};
                    want = CaseTag::OneQuadratic;
                    break;
                }
                case 2:
                    // rotate through rational, zero-root, and non-real pairs
                    switch (d % 3) {
                        case 0: fs = {lin(a1), lin(a2)}; break;
                        case 1:
                            if (a1.is_zero())
                                a1 = Cplx(3);
                            fs = {lin(a1), RatFnC(Y())};
                            break;
                        default: {
                            Cplx b1 = rand_nonreal(rng), b2 = rand_nonreal(rng);
                            if (b1 == b2)
                                b2 += Cplx(3);
                            fs = {lin(b1), lin(b2)};
                            break;
                        }
                    }
                    want = CaseTag::TwoLinear;
                    break;
                case 3:
                    while (a1.is_zero() || a2.is_zero() || a3.is_zero() || a1 == a2 ||
                           a1 == a3 || a2 == a3) {
                        a1 = Cplx{Alg(rand_rat(rng))};
                        a2 = Cplx{Alg(rand_rat(rng))};
                        a3 = Cplx{Alg(rand_rat(rng))};
                    }
                    if (d % 2)
                        fs = {RatFnC(from_roots({a1, Cplx(0)})),
                              RatFnC(from_roots({a2, Cplx(0)}))};
                    else
                        fs = {RatFnC(from_roots({a1, a2})), RatFnC(from_roots({a1, a3}))};
                    want = CaseTag::ThreeQuadratic;
                    break;
            }
            RadicandSet R;
            RadicandCase rc = analyze(fs, &R);
            c.check(rc.tag == want, "general family misclassified");
            if (!c.ok)
                break;
            Field F;
            Transformation t = general_transformation(rc, F);
            sweep_check(c, t, R, general_degree(rc.tag), "general " + std::to_string(family));
        }
    }

    // seven real-[0,1] families; the last is the a = 1 special case explored
    // through its admissible Moebius reparametrizations
    for (int family = 0; family < 7 && c.ok; ++family) {
        int done = 0, tries = 0;
        while (done < draws && tries < 4000 && c.ok) {
            ++tries;
            Rat a1 = rand_outside_unit(rng), a2 = rand_outside_unit(rng),
                a3 = rand_outside_unit(rng);
            if (a2 == a1)
                a2 = a1 - 3;
            if (a3 == a1 || a3 == a2)
                a3 = a1 + a2 - 9;
            auto rlin = [](const Rat& a) { return RatFnC(PolyC::linear(Cplx(Alg(a)))); };
            std::vector<RatFnC> fs;
            switch (family) {
                case 0: fs = {rlin(a1)}; break;
                case 1: fs = {RatFnC(from_roots({Cplx(Alg(a1)), Cplx(0)}))}; break;
                case 2: {
                    Rat c0 = rand_rat(rng), c1 = rand_rat(rng);
                    if (c0 == 0)
                        c0 = 3;
                    fs = {RatFnC(PolyC(std::vector<Cplx>{Cplx(Alg(c0)), Cplx(Alg(c1)), Cplx(1)}))};
                    break;
                }
                case 3: fs = {RatFnC(Y()), rlin(a1)}; break;
                case 4: fs = {rlin(a1), rlin(a2)}; break;
                case 5:
                    if (rng() % 2)
                        fs = {RatFnC(from_roots({Cplx(Alg(a1)), Cplx(0)})),
                              RatFnC(from_roots({Cplx(Alg(a2)), Cplx(0)}))};
                    else
                        fs = {RatFnC(from_roots({Cplx(Alg(a1)), Cplx(Alg(a2))})),
                              RatFnC(from_roots({Cplx(Alg(a1)), Cplx(Alg(a3))}))};
                    break;
                case 6:  // x(1-x): zero-root quadratic with the other root at 1
                    fs = {RatFnC(Y() * (PolyC(Cplx(1)) - Y()))};
                    break;
            }
            RadicandSet R;
            RadicandCase rc = analyze(fs, &R);
            if (rc.tag == CaseTag::Empty || !rc.eligibility.real_ok)
                continue;  // square draws and ineligible draws are rejected
            Field F;
            Transformation t = unit_interval_transformation(rc, Variant::RealUnitInterval, F);
            if (family == 6) {
                c.check(t.g == RatFnC(Y() * Y(),
                                      PolyC(std::vector<Cplx>{Cplx(1), Cplx(-2), Cplx(2)})),
                        "a = 1 special-case formula mismatch");
                Rat lam(1 + long(rng() % 6), 1 + long(rng() % 4));
                t = compose_moebius(t, Alg(lam));
            }
            sweep_check(c, t, R, general_degree(rc.tag), "real " + std::to_string(family));
            ++done;
        }
        c.check(done == draws, "real family " + std::to_string(family) +
                                   " reached only " + std::to_string(done) + " draws");
    }

    // three complex-[0,1] families
    for (int family = 0; family < 3 && c.ok; ++family) {
        int done = 0, tries = 0;
        while (done < draws && tries < 4000 && c.ok) {
            ++tries;
            Cplx a = rand_nonreal(rng);
            std::vector<RatFnC> fs;
            switch (family) {
                case 0: fs = {RatFnC(from_roots({a, a.conj()}))}; break;
                case 1:
                    fs = {RatFnC(from_roots({a, Cplx(0)})),
                          RatFnC(from_roots({a.conj(), Cplx(0)}))};
                    break;
                case 2: {
                    Cplx r{Alg(rand_outside_unit(rng))};
                    fs = {RatFnC(from_roots({r, a})), RatFnC(from_roots({r, a.conj()}))};
                    break;
                }
            }
            RadicandSet R;
            RadicandCase rc = analyze(fs, &R);
            if (rc.tag == CaseTag::Empty || !rc.eligibility.complex_ok)
                continue;
            Field F;
            Transformation t = unit_interval_transformation(rc, Variant::ComplexUnitInterval, F);
            sweep_check(c, t, R, 4, "complex " + std::to_string(family));
            ++done;
        }
        c.check(done == draws, "complex family " + std::to_string(family) +
                                   " reached only " + std::to_string(done) + " draws");
    }

    double secs = seconds_since(t0);
    c.check(secs < 300.0, "runtime over 5 min");
    report(5, c, "catalog sweep: 14 families x 50 draws, exact certification", secs);
    report(6, crit6, "degree minimality: 2 for single radicands, 4 for multi-root", secs);
}

// 7. Obstruction soundness: classify against a brute-force F2-span oracle
// over radicands with roots in {-2, ..., 3}.
void criterion7()
{
    auto t0 = clock_type::now();
    Crit c;

    std::vector<Cplx> roots;
    for (long r = -2; r <= 3; ++r)
        roots.emplace_back(Alg(r));

    auto make_poly = [&](unsigned m) {
        PolyC p{Cplx(1)};
        for (int i = 0; i < 6; ++i)
            if (m & (1u << i))
                p = p * PolyC::linear(roots[size_t(i)]);
        return p;
    };
    auto oracle_obstructed = [](std::vector<unsigned> vecs) {
        std::vector<unsigned> basis;
        for (unsigned v : vecs) {
            for (unsigned b : basis)
                v = std::min(v, v ^ b);
            if (v)
                basis.push_back(v);
        }
        size_t k = basis.size();
        for (unsigned combo = 1; combo < (1u << k); ++combo) {
            unsigned m = 0;
            for (size_t i = 0; i < k; ++i)
                if (combo & (1u << i))
                    m ^= basis[i];
            if (__builtin_popcount(m) >= 3)
                return true;
        }
        return false;
    };

    int checked = 0, agreed = 0;
    auto run = [&](const std::vector<unsigned>& masks) {
        std::vector<RatFnC> F;
        for (unsigned m : masks)
            F.push_back(RatFnC(make_poly(m)));
        RadicandCase rc = classify(normalize(F));
        bool blocked = rc.tag == CaseTag::NoTransformation;
        ++checked;
        if (blocked == oracle_obstructed(masks))
            ++agreed;
        else
            c.check(false, "oracle disagreement on a root-subset instance");
    };

    // the named instance x(x-1)(x-2): roots 0, 1, 2
    {
        std::vector<RatFnC> F{RatFnC(Y() * PolyC::linear(Cplx(1)) * PolyC::linear(Cplx(2)))};
        c.check(classify(normalize(F)).tag == CaseTag::NoTransformation,
                "x(x-1)(x-2) not rejected");
    }

    // every single radicand over a root subset, and every pair of radicands
    // with at most two roots each
    std::vector<unsigned> small;
    for (unsigned m = 1; m < 64; ++m) {
        run({m});
        if (__builtin_popcount(m) <= 2)
            small.push_back(m);
    }
    for (size_t i = 0; i < small.size(); ++i)
        for (size_t j = i + 1; j < small.size(); ++j)
            run({small[i], small[j]});

    c.check(agreed == checked, "agreement below 100%");
    report(7, c,
           "obstruction vs brute-force oracle on " + std::to_string(checked) +
               " root-subset instances, 100% agreement",
           seconds_since(t0));
}

// 8. Shuffle properties: term counts and the numeric product identity.
void criterion8()
{
    auto t0 = clock_type::now();
    Crit c;

    std::vector<Letter> pool;
    for (long p : {-1, -2, -3, 2, 3, 4})
        pool.push_back(Letter::rat(Cplx(p)));
    for (int k1 = 1; k1 <= 5; ++k1) {
        for (int k2 = 1; k1 + k2 <= 6; ++k2) {
            IntegralWord u = word({pool.begin(), pool.begin() + k1}, 0);
            IntegralWord v = word({pool.begin() + k1, pool.begin() + k1 + k2}, 0);
            long count = long(shuffle(u, v).terms.size());
            c.check(count == binom(k1 + k2, k1),
                    "term count " + std::to_string(count) + " for lengths " +
                        std::to_string(k1) + "," + std::to_string(k2));
        }
    }

    IntegralWord u = word({Letter::rat(Cplx(-1))}, 0);
    IntegralWord v = word({Letter::rat(Cplx(2)), Letter::rat(Cplx(-3))}, 0);
    WordCombination sh = shuffle(u, v);
    for (double x : {0.25, 0.5, 0.75}) {
        double lhs = eval_word(u, x) * eval_word(v, x);
        double rhs = 0;
        for (const auto& [co, t] : sh.terms)
            rhs += co.to_double() * eval_word(t, x);
        c.check(std::abs(lhs - rhs) < 1e-8, "product identity off at x = " + std::to_string(x));
    }

    report(8, c, "shuffle term counts up to combined length 6, product identity",
           seconds_since(t0));
}

// 9. Mutant detection: seeded corruptions of catalog output must all be
// rejected by the verifier; the uncorrupted bases must all pass.
Transformation bump_g_coeff(Transformation t, int i)
{
    std::vector<Cplx> co(t.g.num().coeffs());
    co.resize(size_t(std::max(i + 1, int(co.size()))), Cplx(0));
    co[size_t(i)] += Cplx(1);
    t.g = RatFnC(PolyC(std::move(co)), t.g.den());
    return t;
}

Transformation flip_g_coeff(Transformation t, int i)
{
    std::vector<Cplx> co(t.g.num().coeffs());
    if (i < int(co.size()) && !co[size_t(i)].is_zero())
        co[size_t(i)] = -co[size_t(i)];
    else
        co.empty() ? co.push_back(Cplx(1)) : void(co[0] += Cplx(3));
    t.g = RatFnC(PolyC(std::move(co)), t.g.den());
    return t;
}

Transformation drop_g_root(Transformation t)
{
    PolyC num = t.g.num();
    if (num.degree() >= 1 && num.coeff(0).is_zero())
        num = num / PolyC::variable();
    else
        num = num + PolyC(Cplx(5));
    t.g = RatFnC(num, t.g.den());
    return t;
}

Transformation bump_inverse(Transformation t)
{
    t.gInverse += SqrtExprC(t.ctx, RatFnC(Cplx(1)));
    return t;
}

Transformation flip_sign(Transformation t)
{
    // flipping a radical term only selects a conjugate branch; corrupt the
    // branch-invariant rational term, or a denominator coefficient of g
    auto it = t.gInverse.terms().find(0);
    if (it != t.gInverse.terms().end()) {
        t.gInverse -= SqrtExprC(t.ctx, it->second + it->second);
        return t;
    }
    std::vector<Cplx> co(t.g.den().coeffs());
    size_t i = 0;
    while (i < co.size() && co[i].is_zero())
        ++i;
    co[i] = -co[i];
    t.g = RatFnC(t.g.num(), PolyC(std::move(co)));
    return t;
}

Transformation drop_inverse_term(Transformation t)
{
    auto mask = t.gInverse.terms().rbegin()->first;
    auto coeff = t.gInverse.terms().rbegin()->second;
    t.gInverse -= SqrtExprC::monomial(t.ctx, mask, coeff);
    return t;
}

bool any_verifier_rejects(const Transformation& t, const RadicandSet& R)
{
    if (!verify_rationalizes(t, R).pass)
        return true;
    if (!verify_inverse(t).pass)
        return true;
    if (t.variant == Variant::General)
        return !verify_puiseux_branch(t);
    return !verify_unit_interval_bijection(t).pass;
}

void criterion9()
{
    auto t0 = clock_type::now();
    Crit c;

    Field F;
    std::vector<std::pair<Transformation, RadicandSet>> bases;
    auto add_general = [&](const std::vector<RatFnC>& fs) {
        RadicandSet R;
        RadicandCase rc = analyze(fs, &R);
        bases.emplace_back(general_transformation(rc, F), R);
    };
    auto add_real = [&](const std::vector<RatFnC>& fs) {
        RadicandSet R;
        RadicandCase rc = analyze(fs, &R);
        bases.emplace_back(unit_interval_transformation(rc, Variant::RealUnitInterval, F), R);
    };
    add_general({RatFnC(PolyC::linear(Cplx(2)))});
    add_general({RatFnC(PolyC::linear(Cplx(1))), RatFnC(Y())});
    add_general({RatFnC(PolyC(std::vector<Cplx>{Cplx(1), Cplx(3), Cplx(1)}))});
    add_real({RatFnC(Y() * (PolyC(Cplx(1)) + Y())), RatFnC(Y() * (PolyC(Cplx(1)) - Y()))});
    add_real({RatFnC(PolyC::linear(Cplx(-1)))});

    int mutants = 0, caught = 0;
    for (auto& [t, R] : bases) {
        c.check(!any_verifier_rejects(t, R), "verifier rejects an uncorrupted base");
        std::vector<Transformation> bad;
        bad.push_back(bump_g_coeff(t, 1));
        bad.push_back(bump_g_coeff(t, 2));
        bad.push_back(flip_g_coeff(t, 1));
        bad.push_back(drop_g_root(t));
        bad.push_back(bump_inverse(t));
        bad.push_back(flip_sign(t));
        bad.push_back(drop_inverse_term(t));
        for (const Transformation& m : bad) {
            ++mutants;
            if (any_verifier_rejects(m, R))
                ++caught;
            else
                c.check(false, "a corruption passed all verifiers");
        }
    }
    c.check(mutants >= 30, "fewer than 30 corruptions generated");
    c.check(caught == mutants, "false passes detected");

    report(9, c,
           std::to_string(caught) + "/" + std::to_string(mutants) +
               " seeded catalog corruptions caught, zero false passes",
           seconds_since(t0));
}

}  // namespace

int main()
{
    struct Case {
        int n;
        void (*fn)();
        const char* desc;
    };
    const Case cases[] = {
        {1, criterion1, "flagship symbolic transformation"},
        {2, criterion2, "flagship numeric agreement"},
        {3, criterion3, "sum pipeline"},
        {4, criterion4, "closed form"},
        {5, criterion5, "catalog sweep and degree table"},
        {7, criterion7, "obstruction soundness"},
        {8, criterion8, "shuffle properties"},
        {9, criterion9, "mutant detection"},
    };
    for (const Case& k : cases) {
        try {
            k.fn();
        } catch (const std::exception& e) {
            Crit c;
            c.check(false, std::string("exception: ") + e.what());
            report(k.n, c, k.desc, 0.0);
        }
    }
    return failures ? 1 : 0;
}
