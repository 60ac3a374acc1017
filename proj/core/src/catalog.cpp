#include "radix/catalog.hpp"

namespace radix {

const char* variant_name(Variant v)
{
    switch (v) {
        case Variant::General: return "general";
        case Variant::RealUnitInterval: return "real01";
        case Variant::ComplexUnitInterval: return "complex01";
    }
    return "?";
}

namespace {

using Ctx = std::shared_ptr<const SqrtCtxC>;

Ctx make_ctx(std::vector<PolyC> radicands)
{
    auto s = std::make_shared<SqrtCtxC>();
    s->radicands = std::move(radicands);
    return s;
}

SqrtExprC sym(const Ctx& c, unsigned i) { return SqrtExprC::symbol(c, i); }

SqrtExprC sc(const Ctx& c, RatFnC v) { return SqrtExprC(c, std::move(v)); }

void absorb_scalar(Field& F, const Cplx& z)
{
    F.absorb(z.re.tower());
    F.absorb(z.im.tower());
}

void absorb_case(Field& F, const RadicandCase& c)
{
    for (const Cplx& r : c.roots)
        absorb_scalar(F, r);
    absorb_scalar(F, c.c0);
    absorb_scalar(F, c.c1);
    for (const Cplx& r : c.eligibility.complex_roots)
        absorb_scalar(F, r);
}

/// image of sqrt(f) under x = g(y), from the exact square decomposition
void derive_images(Transformation& t, Field& F)
{
    for (const PolyC& f : t.ctx->radicands) {
        RatFnC fc = compose(RatFnC(f), t.g);
        auto sq = is_square(fc);
        if (!sq)
            throw domain_error("catalog: radicand does not become a square under g");
        Cplx s = F.sqrt(sq->first);
        t.imageRadicands.push_back(f);
        t.sqrtImages.push_back(RatFnC(PolyC(s)) * sq->second);
    }
}

const char* kGeneralNote =
    "g(0) = 0; g(g^{-1}(x)) = x identically; the inverse selects the Puiseux "
    "branch with g^{-1}(g(y)) = y at y = 0";

Transformation general_one_linear(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    Cplx a = c.roots[0];
    if (a.is_zero()) {
        t.ctx = make_ctx({y});
        t.g = RatFnC(y * y);
        t.gInverse = sym(t.ctx, 0);
    } else {
        t.ctx = make_ctx({PolyC::linear(a)});
        t.g = RatFnC(Cplx(-4) * a * (y * y + y));
        Cplx s = F.sqrt(-a);
        // (r - s)/(2s)
        RatFnC k = RatFnC((Cplx(2) * s).inv());
        t.gInverse = (sym(t.ctx, 0) - sc(t.ctx, RatFnC(s))) * sc(t.ctx, k);
    }
    return t;
}

Transformation general_one_quadratic(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    Cplx c0 = c.c0, c1 = c.c1;
    t.ctx = make_ctx({PolyC(std::vector<Cplx>{c0, c1, Cplx(1)})});
    RatFnC x = RatFnC::variable();
    if (c0.is_zero()) {
        // c1 y^2 / (4(y+1))
        t.g = RatFnC(c1 * (y * y), PolyC(std::vector<Cplx>{Cplx(4), Cplx(4)}));
        RatFnC k = RatFnC(Cplx(2)) / RatFnC(c1);
        t.gInverse = (sc(t.ctx, x) + sym(t.ctx, 0)) * sc(t.ctx, k);
    } else {
        Cplx d = c1 * c1 - Cplx(4) * c0;
        t.g = RatFnC(PolyC(std::vector<Cplx>{Cplx(0), Cplx(4) * c0}),
                     PolyC(std::vector<Cplx>{Cplx(1), Cplx(-2) * c1, d}));
        Cplx s = F.sqrt(c0);
        RatFnC dx = RatFnC(d) * x;
        t.gInverse = sc(t.ctx, (RatFnC(c1) * x + RatFnC(Cplx(2) * c0)) / dx) -
                     sym(t.ctx, 0) * sc(t.ctx, RatFnC(Cplx(2) * s) / dx);
    }
    return t;
}

Transformation general_two_linear(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    RatFnC x = RatFnC::variable();
    Cplx a1 = c.roots[0], a2 = c.roots[1];
    if (a2.is_zero()) {
        t.ctx = make_ctx({PolyC::linear(a1), y});
        PolyC d = y * y + PolyC(Cplx(1));
        t.g = RatFnC(Cplx(4) * a1 * (y * y), d * d);
        Cplx sa = F.sqrt(a1), sna = F.sqrt(-a1);
        // (sa/x) r2 - (sa/(sna x)) r1 r2
        t.gInverse = sym(t.ctx, 1) * sc(t.ctx, RatFnC(sa) / x) -
                     sym(t.ctx, 0) * sym(t.ctx, 1) * sc(t.ctx, RatFnC(sa / sna) / x);
    } else {
        t.ctx = make_ctx({PolyC::linear(a1), PolyC::linear(a2)});
        PolyC d = y * y - PolyC(a1 * a2);
        t.g = RatFnC(Cplx(4) * a1 * a2 * (y * (y - PolyC(a1)) * (y - PolyC(a2))), d * d);
        Cplx s1 = F.sqrt(-a1), s2 = F.sqrt(-a2);
        SqrtExprC f1 = sc(t.ctx, RatFnC(a1)) + sym(t.ctx, 0) * sc(t.ctx, RatFnC(s1));
        SqrtExprC f2 = sc(t.ctx, RatFnC(a2)) + sym(t.ctx, 1) * sc(t.ctx, RatFnC(s2));
        t.gInverse = f1 * f2 * sc(t.ctx, x.inv());
    }
    return t;
}

Transformation general_three_quadratic(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    RatFnC x = RatFnC::variable();
    Cplx a1 = c.roots[0], a2 = c.roots[1], a3 = c.roots[2];
    PolyC l1 = PolyC::linear(a1), l2 = PolyC::linear(a2), l3 = PolyC::linear(a3);
    t.ctx = make_ctx({l1 * l2, l1 * l3, l2 * l3});
    if (a3.is_zero()) {
        Cplx d2 = (a1 - a2) * (a1 - a2);
        t.g = RatFnC(Cplx(4) * a1 * a2 * (y * y),
                     PolyC(std::vector<Cplx>{Cplx(1), Cplx(0), Cplx(2) * (a1 + a2), Cplx(0), d2}));
        Cplx s12 = F.sqrt(a1 * a2), s1 = F.sqrt(-a1), s2 = F.sqrt(-a2);
        RatFnC k = RatFnC(s12) / (RatFnC(a1 - a2) * x);
        // r2 = sqrt(x(x-a1)), r3 = sqrt(x(x-a2))
        t.gInverse = (sym(t.ctx, 1) * sc(t.ctx, RatFnC(s1.inv())) -
                      sym(t.ctx, 2) * sc(t.ctx, RatFnC(s2.inv()))) *
                     sc(t.ctx, k);
    } else {
        Cplx s1 = a1 + a2 + a3, s2 = a1 * a2 + a1 * a3 + a2 * a3, s3 = a1 * a2 * a3;
        PolyC q(std::vector<Cplx>{s3 * s3, Cplx(0), Cplx(-2) * s1 * s3, Cplx(8) * s3,
                                  s1 * s1 - Cplx(4) * s2});
        t.g = RatFnC(Cplx(-4) * s3 * (y * (y - PolyC(a1)) * (y - PolyC(a2)) * (y - PolyC(a3))), q);
        Cplx r12 = F.sqrt(a1 * a2), r13 = F.sqrt(a1 * a3);
        RatFnC pre = RatFnC(s3) / (RatFnC(s1 * s1 - Cplx(4) * s2) * x + RatFnC(Cplx(4) * s3));
        SqrtExprC inner =
            sc(t.ctx, RatFnC(s1) - RatFnC(Cplx(2)) * x) -
            sym(t.ctx, 0) * sc(t.ctx, RatFnC((s1 - Cplx(2) * a3) / r12)) -
            sym(t.ctx, 1) * sc(t.ctx, RatFnC((s1 - Cplx(2) * a2) / r13)) +
            sym(t.ctx, 0) * sym(t.ctx, 1) *
                sc(t.ctx, RatFnC(a1 * (s1 - Cplx(2) * a1) / (r12 * r13)) / RatFnC(l1));
        t.gInverse = inner * sc(t.ctx, pre);
    }
    return t;
}

const char* kRealNote01 =
    "maps [0,1] bijectively onto itself, monotonically increasing; outside "
    "[0,1] the inverse formulas satisfy g(g^{-1}(x)) = x but need not invert g";

/* real variant, one linear radicand */
Transformation real_one_linear(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    RatFnC x = RatFnC::variable();
    Alg a = c.roots[0].re;
    if (a.is_zero()) {
        t.ctx = make_ctx({y});
        t.g = RatFnC(y * y);
        t.gInverse = sym(t.ctx, 0);
        t.imageRadicands = {y};
        t.sqrtImages = {RatFnC(y)};
        // x / sqrt(x)
        t.gInverseAlt = sc(t.ctx, x) * sym(t.ctx, 0).inverse();
        t.validityNote = kRealNote01;
        return t;
    }
    Alg one(1);
    Alg alpha = F.sqrt(one - a.inv());
    // radicand a^-1 (a - x) = 1 - x/a
    t.ctx = make_ctx({PolyC(std::vector<Cplx>{Cplx(one), Cplx(-a.inv())})});
    Alg two(2);
    t.g = RatFnC(PolyC(std::vector<Cplx>{Cplx(Alg(0)), Cplx(two * a * (one - alpha)),
                                         Cplx(one - two * a + two * a * alpha)}));
    Cplx k{a * (one + alpha)};
    t.gInverse = sc(t.ctx, RatFnC(k)) - sym(t.ctx, 0) * sc(t.ctx, RatFnC(k));
    t.imageRadicands = {t.ctx->radicands[0]};
    t.sqrtImages = {RatFnC(PolyC(std::vector<Cplx>{Cplx(one), Cplx(alpha - one)}))};
    t.gInverseAlt = sc(t.ctx, RatFnC(Cplx(one + alpha)) * x) *
                    (sc(t.ctx, RatFnC(Cplx(one))) + sym(t.ctx, 0)).inverse();
    t.validityNote = kRealNote01;
    return t;
}

/* real variant, one quadratic radicand */
Transformation real_one_quadratic(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    RatFnC x = RatFnC::variable();
    Alg one(1), two(2);
    if (c.c0.is_zero()) {
        Alg a = -c.c1.re;
        if (a == one) {
            // radicand x(1-x)
            t.ctx = make_ctx({PolyC(std::vector<Cplx>{Cplx(0), Cplx(1), Cplx(-1)})});
            PolyC den(std::vector<Cplx>{Cplx(1), Cplx(-2), Cplx(2)});
            t.g = RatFnC(y * y, den);
            RatFnC d = RatFnC(Cplx(2)) * x - RatFnC(Cplx(1));
            t.gInverse = sc(t.ctx, x / d) - sym(t.ctx, 0) * sc(t.ctx, d.inv());
            t.imageRadicands = {t.ctx->radicands[0]};
            t.sqrtImages = {RatFnC(PolyC(std::vector<Cplx>{Cplx(0), Cplx(1), Cplx(-1)}), den)};
            t.gInverseAlt = sc(t.ctx, x) * (sc(t.ctx, x) + sym(t.ctx, 0)).inverse();
            t.validityNote = std::string(kRealNote01) +
                             "; the singularity of the inverse at x = 1/2 is removable";
            return t;
        }
        Alg alpha = F.sqrt(one - a.inv());
        // radicand a^-1 x(a-x)
        t.ctx = make_ctx({PolyC(std::vector<Cplx>{Cplx(0), Cplx(one), Cplx(-a.inv())})});
        PolyC den(std::vector<Cplx>{Cplx(a - one), Cplx(0), Cplx(1)});
        t.g = RatFnC(PolyC(std::vector<Cplx>{Cplx(0), Cplx(0), Cplx(a)}), den);
        RatFnC ax = RatFnC(PolyC(std::vector<Cplx>{Cplx(a), Cplx(-1)}));  // a - x
        t.gInverse = sym(t.ctx, 0) * sc(t.ctx, RatFnC(Cplx(a * alpha)) / ax);
        t.imageRadicands = {t.ctx->radicands[0]};
        t.sqrtImages = {RatFnC(PolyC(std::vector<Cplx>{Cplx(0), Cplx(a * alpha)}), den)};
        t.gInverseAlt = sc(t.ctx, RatFnC(Cplx(alpha)) * x) * sym(t.ctx, 0).inverse();
        t.validityNote = kRealNote01;
        return t;
    }
    Alg c0 = c.c0.re, c1 = c.c1.re;
    Alg alpha = F.sqrt(one + c0.inv() * (c1 + one));
    Alg D = one + two * c0 + c1 + two * c0 * alpha;
    // radicand c0^-1 (x^2 + c1 x + c0)
    t.ctx = make_ctx(
        {PolyC(std::vector<Cplx>{Cplx(one), Cplx(c1 * c0.inv()), Cplx(c0.inv())})});
    t.g = RatFnC(PolyC(std::vector<Cplx>{Cplx(0), Cplx(two * c0 * (one + alpha)), Cplx(c1)}),
                 PolyC(std::vector<Cplx>{Cplx(D), Cplx(0), Cplx(-1)}));
    RatFnC xc1 = RatFnC(PolyC(std::vector<Cplx>{Cplx(c1), Cplx(1)}));
    RatFnC k = RatFnC(Cplx(c0 * (one + alpha)));
    t.gInverse = (sym(t.ctx, 0) - sc(t.ctx, RatFnC(Cplx(1)))) * sc(t.ctx, k / xc1);
    t.imageRadicands = {t.ctx->radicands[0]};
    t.sqrtImages = {
        RatFnC(PolyC(std::vector<Cplx>{Cplx(D), Cplx(c1 * (one + alpha)), Cplx(one)}),
               PolyC(std::vector<Cplx>{Cplx(D), Cplx(0), Cplx(-1)}))};
    t.gInverseAlt = sc(t.ctx, RatFnC(Cplx(one + alpha)) * x) *
                    (sc(t.ctx, RatFnC(Cplx(1))) + sym(t.ctx, 0)).inverse();
    t.validityNote = std::string(kRealNote01) +
                     "; the singularity of the inverse at x = -c1 is removable";
    return t;
}

/* real variant, radicands {x, a^-1(a-x)} */
Transformation real_two_linear_zero(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    RatFnC x = RatFnC::variable();
    Alg one(1), two(2);
    Alg a = c.roots[0].re;
    Alg alpha = F.sqrt(one - a.inv());
    t.ctx = make_ctx({y, PolyC(std::vector<Cplx>{Cplx(one), Cplx(-a.inv())})});
    PolyC w(std::vector<Cplx>{Cplx(one + alpha), Cplx(0), Cplx(one - alpha)});
    t.g = RatFnC(Cplx(4) * (y * y), w * w);
    Cplx k{a * (one + alpha)};
    t.gInverse = (sc(t.ctx, RatFnC(k)) - sym(t.ctx, 1) * sc(t.ctx, RatFnC(k))) *
                 sym(t.ctx, 0).inverse();
    Alg B = one - two * a * (one + alpha);
    t.imageRadicands = {t.ctx->radicands[0], t.ctx->radicands[1]};
    t.sqrtImages = {
        RatFnC(PolyC(std::vector<Cplx>{Cplx(0), Cplx(2)}), w),
        RatFnC(PolyC(std::vector<Cplx>{Cplx(B), Cplx(0), Cplx(one)}),
               PolyC(std::vector<Cplx>{Cplx(B), Cplx(0), Cplx(-one)}))};
    t.gInverseAlt = sc(t.ctx, RatFnC(Cplx(one + alpha))) * sym(t.ctx, 0) *
                    (sc(t.ctx, RatFnC(Cplx(1))) + sym(t.ctx, 1)).inverse();
    t.validityNote = kRealNote01;
    return t;
}

/* real variant, radicands {a1^-1(a1-x), a2^-1(a2-x)}; also the conjugate
   complex configuration with the same formulas */
Transformation real_two_linear(const Cplx& a1, const Cplx& a2, const Alg& alpha, Field&)
{
    Transformation t;
    PolyC y = PolyC::variable();
    RatFnC x = RatFnC::variable();
    Cplx one(1), two(2);
    Cplx al{alpha};
    t.ctx = make_ctx({PolyC(std::vector<Cplx>{one, -a1.inv()}),
                      PolyC(std::vector<Cplx>{one, -a2.inv()})});
    Cplx p = a1 * a2 * al * al;
    PolyC d = y * y - PolyC(p);
    t.g = RatFnC(Cplx(4) * a1 * a2 * al * (y * (y - PolyC(a1 * al)) * (y - PolyC(a2 * al))),
                 d * d);
    Cplx k = a1 * a2 * al;
    t.gInverse = (sc(t.ctx, RatFnC(one)) - sym(t.ctx, 0)) *
                 (sc(t.ctx, RatFnC(one)) - sym(t.ctx, 1)) * sc(t.ctx, RatFnC(k) / x);
    PolyC dn = -(y * y) + PolyC(p);
    t.imageRadicands = {t.ctx->radicands[0], t.ctx->radicands[1]};
    t.sqrtImages = {RatFnC(PolyC(std::vector<Cplx>{p, -two * a2 * al, one}), dn),
                    RatFnC(PolyC(std::vector<Cplx>{p, -two * a1 * al, one}), dn)};
    t.gInverseAlt = sc(t.ctx, RatFnC(al) * x) *
                    ((sc(t.ctx, RatFnC(one)) + sym(t.ctx, 0)) *
                     (sc(t.ctx, RatFnC(one)) + sym(t.ctx, 1)))
                        .inverse();
    t.validityNote = std::string(kRealNote01) +
                     "; the singularity of the inverse at x = 0 is removable";
    return t;
}

/* real variant, radicands {a1^-1 x(a1-x), a2^-1 x(a2-x),
   (a1 a2)^-1 (a1-x)(a2-x)} */
Transformation real_three_quadratic_zero(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    RatFnC x = RatFnC::variable();
    Alg one(1), two(2);
    Alg a1 = c.roots[0].re, a2 = c.roots[1].re;
    Alg b1 = F.sqrt(one - a1.inv()), b2 = F.sqrt(one - a2.inv());
    Alg alpha = b1 * b2;
    Alg s1 = a1 + a2, s2 = a1 * a2;
    PolyC f1(std::vector<Cplx>{Cplx(0), Cplx(one), Cplx(-a1.inv())});
    PolyC f2(std::vector<Cplx>{Cplx(0), Cplx(one), Cplx(-a2.inv())});
    PolyC f3 = PolyC(std::vector<Cplx>{Cplx(one), Cplx(-a1.inv())}) *
               PolyC(std::vector<Cplx>{Cplx(one), Cplx(-a2.inv())});
    t.ctx = make_ctx({f1, f2, f3});
    PolyC q(std::vector<Cplx>{Cplx(-s1 + two * s2 * (one + alpha)), Cplx(0), Cplx(two * s1),
                              Cplx(0), Cplx(-s1 + two * s2 * (one - alpha))});
    t.g = RatFnC(Cplx(Alg(4) * s2) * (y * y), q);
    Cplx k{s2 * (b1 + b2) / (a1 - a2)};
    t.gInverse = (sym(t.ctx, 0) - sym(t.ctx, 1)) * sc(t.ctx, RatFnC(k) / x);
    t.imageRadicands = {f1, f2, f3};
    t.sqrtImages = {
        RatFnC(Cplx(two * s2) *
                   (y * PolyC(std::vector<Cplx>{Cplx(b1 + b2), Cplx(0), Cplx(b1 - b2)})),
               q),
        RatFnC(Cplx(two * s2) *
                   (y * PolyC(std::vector<Cplx>{Cplx(b1 + b2), Cplx(0), Cplx(b2 - b1)})),
               q),
        RatFnC(PolyC(std::vector<Cplx>{Cplx(-s1 + two * s2 * (one + alpha)), Cplx(0), Cplx(0),
                                       Cplx(0), Cplx(s1 - two * s2 * (one - alpha))}),
               q)};
    t.gInverseAlt = sc(t.ctx, RatFnC(Cplx(b1 + b2)) * x) *
                    (sym(t.ctx, 0) + sym(t.ctx, 1)).inverse();
    // restriction-free form over single-root radicands
    PolyC g1(std::vector<Cplx>{Cplx(one), Cplx(-a1.inv())});
    PolyC g2(std::vector<Cplx>{Cplx(one), Cplx(-a2.inv())});
    t.liftedCtx = make_ctx({y, g1, g2});
    auto rr = [&](unsigned i, unsigned j) { return sym(t.liftedCtx, i) * sym(t.liftedCtx, j); };
    t.liftedInverse = (rr(0, 1) - rr(0, 2)) * sc(t.liftedCtx, RatFnC(k) / x);
    t.liftedInverseAlt =
        sc(t.liftedCtx, RatFnC(Cplx(b1 + b2)) * x) * (rr(0, 1) + rr(0, 2)).inverse();
    t.validityNote =
        std::string(kRealNote01) +
        "; the image of the third radicand and the inverse formulas hold for x in [0,1]; "
        "the lifted forms over sqrt(x), sqrt(a1^-1(a1-x)), sqrt(a2^-1(a2-x)) hold generally";
    return t;
}

/* real variant, radicands {(ai-x)(aj-x)/(ai aj)} */
Transformation real_three_quadratic(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    RatFnC x = RatFnC::variable();
    Alg one(1), two(2);
    Alg a[3] = {c.roots[0].re, c.roots[1].re, c.roots[2].re};
    Alg b[3];
    for (int i = 0; i < 3; ++i)
        b[i] = F.sqrt(one - a[i].inv());
    Alg alpha = b[0] * b[1] + b[0] * b[2] + b[1] * b[2];
    Alg A = one + alpha;
    Alg s1 = a[0] + a[1] + a[2], s2 = a[0] * a[1] + a[0] * a[2] + a[1] * a[2],
        s3 = a[0] * a[1] * a[2];
    PolyC l[3];
    for (int i = 0; i < 3; ++i)
        l[i] = PolyC(std::vector<Cplx>{Cplx(one), Cplx(-a[i].inv())});  // (ai-x)/ai
    t.ctx = make_ctx({l[0] * l[1], l[0] * l[2], l[1] * l[2]});
    PolyC q(std::vector<Cplx>{Cplx(s3 * s3 * A * A * A * A), Cplx(0),
                              Cplx(-two * s1 * s3 * A * A), Cplx(Alg(8) * s3 * A),
                              Cplx(s1 * s1 - Alg(4) * s2)});
    PolyC num = y;
    for (int i = 0; i < 3; ++i)
        num = num * (y - PolyC(Cplx(a[i] * A)));
    t.g = RatFnC(Cplx(Alg(-4) * s3) * num, q);
    RatFnC pre = RatFnC(Cplx(-s3 * A)) /
                 (RatFnC(Cplx(s1 * s1 - Alg(4) * s2)) * x + RatFnC(Cplx(Alg(4) * s3)));
    SqrtExprC inner = sc(t.ctx, RatFnC(Cplx(2)) * x - RatFnC(Cplx(s1)));
    Alg coef[3] = {s1 - two * a[2], s1 - two * a[1], s1 - two * a[0]};
    for (unsigned i = 0; i < 3; ++i)
        inner += sym(t.ctx, i) * sc(t.ctx, RatFnC(Cplx(coef[i])));
    t.gInverse = inner * sc(t.ctx, pre);
    PolyC p[3];
    for (int i = 0; i < 3; ++i)
        p[i] = PolyC(std::vector<Cplx>{Cplx(s3 * A * A), Cplx(-two * (s3 / a[i]) * A),
                                       Cplx(s1 - two * a[i])});
    t.imageRadicands = {t.ctx->radicands[0], t.ctx->radicands[1], t.ctx->radicands[2]};
    t.sqrtImages = {RatFnC(p[0] * p[1], q), RatFnC(p[0] * p[2], q), RatFnC(p[1] * p[2], q)};
    SqrtExprC wsum = sc(t.ctx, RatFnC(Cplx(1)));
    for (unsigned i = 0; i < 3; ++i)
        wsum += sym(t.ctx, i);
    t.gInverseAlt = sc(t.ctx, RatFnC(Cplx(A)) * x) * wsum.inverse();
    t.liftedCtx = make_ctx({l[0], l[1], l[2]});
    auto rr = [&](unsigned i, unsigned j) { return sym(t.liftedCtx, i) * sym(t.liftedCtx, j); };
    SqrtExprC inner2 = sc(t.liftedCtx, RatFnC(Cplx(2)) * x - RatFnC(Cplx(s1)));
    inner2 += rr(0, 1) * sc(t.liftedCtx, RatFnC(Cplx(coef[0])));
    inner2 += rr(0, 2) * sc(t.liftedCtx, RatFnC(Cplx(coef[1])));
    inner2 += rr(1, 2) * sc(t.liftedCtx, RatFnC(Cplx(coef[2])));
    t.liftedInverse = inner2 * sc(t.liftedCtx, pre);
    SqrtExprC wsum2 = sc(t.liftedCtx, RatFnC(Cplx(1))) + rr(0, 1) + rr(0, 2) + rr(1, 2);
    t.liftedInverseAlt = sc(t.liftedCtx, RatFnC(Cplx(A)) * x) * wsum2.inverse();
    t.validityNote =
        std::string(kRealNote01) +
        "; inverse formulas certified on [0,1] (removable singularity at "
        "x = -4 s3/(s1^2-4 s2) when inside); the lifted forms over sqrt(ai^-1(ai-x)) "
        "hold generally";
    return t;
}

/* complex variant, conjugate pair of linear radicands */
Transformation complex_two_linear(const RadicandCase& c, Field& F)
{
    const Cplx& a1 = c.eligibility.complex_roots[0];
    Alg one(1), two(2);
    Alg ar = a1.re, ai = a1.im, n2 = a1.norm2();
    // m = |(a1-1)/a1|
    Alg m = F.sqrt(((ar - one) * (ar - one) + ai * ai) / n2);
    Alg alpha = one + m + F.sqrt(two * (one - ar / n2 + m));
    Transformation t = real_two_linear(a1, a1.conj(), alpha, F);
    Alg dn = n2 * alpha * alpha;
    // split the conjugate images into real and imaginary parts
    PolyC den(std::vector<Cplx>{Cplx(dn), Cplx(0), Cplx(-one)});
    RatFnC re(PolyC(std::vector<Cplx>{Cplx(dn), Cplx(-two * ar * alpha), Cplx(one)}), den);
    RatFnC im(PolyC(std::vector<Cplx>{Cplx(Alg(0)), Cplx(two * ai * alpha)}), den);
    t.splitImages = {{re, im}, {re, -im}};
    return t;
}

/* complex variant, quadratics with roots {a, conj(a), 0} */
Transformation complex_three_quadratic_zero(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    RatFnC x = RatFnC::variable();
    Alg one(1), two(2);
    const Cplx& a1 = c.eligibility.complex_roots[0];
    Alg ar = a1.re, ai = a1.im, n2 = a1.norm2();
    Alg alpha = F.sqrt(((ar - one) * (ar - one) + ai * ai) / n2);
    Alg beta = F.sqrt((one - ar / n2 + alpha) / two);
    PolyC q(std::vector<Cplx>{Cplx(n2 - ar + n2 * alpha), Cplx(0), Cplx(two * ar), Cplx(0),
                              Cplx(n2 - ar - n2 * alpha)});
    t.g = RatFnC(Cplx(two * n2) * (y * y), q);
    Cplx ia1 = a1.inv(), ia2 = a1.conj().inv();
    PolyC g1(std::vector<Cplx>{Cplx(1), -ia1});  // (a-x)/a
    PolyC g2(std::vector<Cplx>{Cplx(1), -ia2});
    t.ctx = make_ctx({y, g1, g2});
    Cplx k{Alg(0), -(n2 * beta / ai)};  // -i n2 beta / im(a)
    t.gInverse = (sym(t.ctx, 1) - sym(t.ctx, 2)) * sym(t.ctx, 0).inverse() *
                 sc(t.ctx, RatFnC(k));
    t.imageRadicands = {y * g1, y * g2, g1 * g2};
    Alg C = n2 - ar + n2 * alpha;
    RatFnC bq = RatFnC(Cplx(beta)) * RatFnC(q);
    RatFnC re1 = RatFnC(PolyC(std::vector<Cplx>{Cplx(0), Cplx(C)})) / bq;
    RatFnC im1 = RatFnC(PolyC(std::vector<Cplx>{Cplx(0), Cplx(0), Cplx(0), Cplx(ai)})) / bq;
    RatFnC im3re(PolyC(std::vector<Cplx>{Cplx(C), Cplx(0), Cplx(0), Cplx(0),
                                         Cplx(-(n2 - ar - n2 * alpha))}),
                 q);
    Cplx i1{Alg(0), one};
    t.sqrtImages = {re1 + RatFnC(i1) * im1, re1 - RatFnC(i1) * im1, im3re};
    t.splitImages = {{re1, im1}, {re1, -im1}, {im3re, RatFnC()}};
    auto rr = [&](unsigned i, unsigned j) { return sym(t.ctx, i) * sym(t.ctx, j); };
    t.gInverseAlt =
        sc(t.ctx, RatFnC(Cplx(two * beta)) * x) * (rr(0, 1) + rr(0, 2)).inverse();
    t.validityNote =
        "maps [0,1] bijectively onto itself; images describe the pairwise products of "
        "sqrt(x), sqrt(a^-1(a-x)), sqrt(conj(a)^-1(conj(a)-x)) and hold for general x; "
        "re/im split valid for real y";
    return t;
}

/* complex variant, quadratics with roots {a1 real, a2, conj(a2)} */
Transformation complex_three_quadratic(const RadicandCase& c, Field& F)
{
    Transformation t;
    PolyC y = PolyC::variable();
    RatFnC x = RatFnC::variable();
    Alg one(1), two(2);
    Alg a1 = c.eligibility.complex_roots[0].re;
    const Cplx& a2 = c.eligibility.complex_roots[1];
    Alg br = a2.re, bi = a2.im, nb = a2.norm2();
    Alg m = F.sqrt(((br - one) * (br - one) + bi * bi) / nb);
    Alg alpha = m + F.sqrt((a1 - one) / a1) * F.sqrt(two * (one - br / nb + m));
    Alg A = one + alpha;
    Alg d4 = a1 * a1 - Alg(4) * a1 * br - Alg(4) * bi * bi;
    PolyC q(std::vector<Cplx>{Cplx(a1 * a1 * nb * nb * A * A * A * A), Cplx(0),
                              Cplx(-two * a1 * nb * (a1 + two * br) * A * A),
                              Cplx(Alg(8) * a1 * nb * A), Cplx(d4)});
    PolyC quad(std::vector<Cplx>{Cplx(nb * A * A), Cplx(-two * br * A), Cplx(one)});
    t.g = RatFnC(Cplx(Alg(-4) * a1 * nb) * (y * (y - PolyC(Cplx(a1 * A))) * quad), q);
    PolyC l1(std::vector<Cplx>{Cplx(1), Cplx(-a1.inv())});
    PolyC l2(std::vector<Cplx>{Cplx(1), -a2.inv()});
    PolyC l3(std::vector<Cplx>{Cplx(1), -a2.conj().inv()});
    t.ctx = make_ctx({l1, l2, l3});
    RatFnC pre = RatFnC(Cplx(-a1 * nb * A)) /
                 (RatFnC(Cplx(d4)) * x + RatFnC(Cplx(Alg(4) * a1 * nb)));
    Cplx i2bi{Alg(0), two * bi};
    SqrtExprC inner = sc(t.ctx, RatFnC(Cplx(2)) * x - RatFnC(Cplx(a1 + two * br))) +
                      (sym(t.ctx, 0) * (sym(t.ctx, 1) + sym(t.ctx, 2))) *
                          sc(t.ctx, RatFnC(Cplx(a1))) +
                      sym(t.ctx, 1) * sym(t.ctx, 2) *
                          sc(t.ctx, RatFnC(Cplx(two * br - a1))) +
                      (sym(t.ctx, 0) * (sym(t.ctx, 1) - sym(t.ctx, 2))) *
                          sc(t.ctx, RatFnC(i2bi));
    t.gInverse = inner * sc(t.ctx, pre);
    PolyC p(std::vector<Cplx>{Cplx(a1 * nb * A * A), Cplx(-two * nb * A),
                              Cplx(two * br - a1)});
    PolyC r(std::vector<Cplx>{
        Cplx(a1 * a1 * nb * nb * A * A * A * A), Cplx(-Alg(4) * a1 * a1 * br * nb * A * A * A),
        Cplx(Alg(6) * a1 * a1 * nb * A * A),
        Cplx(-Alg(4) * a1 * (a1 * br + two * bi * bi) * A), Cplx(a1 * a1 + Alg(4) * bi * bi)});
    RatFnC re12 = RatFnC(Cplx(a1) * (quad * p), q);
    RatFnC im12 = RatFnC(Cplx(-two * bi) * (y * (y - PolyC(Cplx(a1 * A))) * p), q);
    RatFnC im3(r, q);
    Cplx i1{Alg(0), one};
    t.imageRadicands = {l1 * l2, l1 * l3, l2 * l3};
    t.sqrtImages = {re12 + RatFnC(i1) * im12, re12 - RatFnC(i1) * im12, im3};
    t.splitImages = {{re12, im12}, {re12, -im12}, {im3, RatFnC()}};
    auto rr = [&](unsigned i, unsigned j) { return sym(t.ctx, i) * sym(t.ctx, j); };
    SqrtExprC wsum = sc(t.ctx, RatFnC(Cplx(1))) + rr(0, 1) + rr(0, 2) + rr(1, 2);
    t.gInverseAlt = sc(t.ctx, RatFnC(Cplx(A)) * x) * wsum.inverse();
    t.validityNote =
        "maps [0,1] bijectively onto itself; images describe the pairwise products of "
        "the single-root square roots and hold for general x; re/im split valid for "
        "real y";
    return t;
}

}  // namespace

Transformation general_transformation(const RadicandCase& c, Field& F)
{
    absorb_case(F, c);
    Transformation t;
    switch (c.tag) {
        case CaseTag::Empty:
            throw usage_error("all radicands are squares; use g(y) = y");
        case CaseTag::NoTransformation:
            throw usage_error("no rationalizing transformation exists (witness " +
                              c.witness.str() + ")");
        case CaseTag::OneLinear: t = general_one_linear(c, F); break;
        case CaseTag::OneQuadratic: t = general_one_quadratic(c, F); break;
        case CaseTag::TwoLinear: t = general_two_linear(c, F); break;
        case CaseTag::ThreeQuadratic: t = general_three_quadratic(c, F); break;
    }
    t.variant = Variant::General;
    t.caseinfo = c;
    derive_images(t, F);
    t.validityNote = kGeneralNote;
    return t;
}

Transformation unit_interval_transformation(const RadicandCase& c, Variant variant, Field& F)
{
    absorb_case(F, c);
    if (c.tag == CaseTag::Empty)
        throw usage_error("all radicands are squares; use g(y) = y");
    if (c.tag == CaseTag::NoTransformation)
        throw usage_error("no rationalizing transformation exists (witness " +
                          c.witness.str() + ")");
    Transformation t;
    if (variant == Variant::RealUnitInterval) {
        if (!c.eligibility.real_ok)
            throw usage_error("not eligible for the real [0,1] variant: " +
                              c.eligibility.real_detail);
        switch (c.tag) {
            case CaseTag::OneLinear: t = real_one_linear(c, F); break;
            case CaseTag::OneQuadratic: t = real_one_quadratic(c, F); break;
            case CaseTag::TwoLinear:
                if (c.roots[1].is_zero())
                    t = real_two_linear_zero(c, F);
                else {
                    Alg one(1);
                    Alg b1 = F.sqrt(one - c.roots[0].re.inv());
                    Alg b2 = F.sqrt(one - c.roots[1].re.inv());
                    t = real_two_linear(c.roots[0], c.roots[1], (one + b1) * (one + b2), F);
                }
                break;
            case CaseTag::ThreeQuadratic:
                t = c.roots[2].is_zero() ? real_three_quadratic_zero(c, F)
                                         : real_three_quadratic(c, F);
                break;
            default: break;
        }
    } else if (variant == Variant::ComplexUnitInterval) {
        if (!c.eligibility.complex_ok)
            throw usage_error("not eligible for the complex [0,1] variant: " +
                              c.eligibility.complex_detail);
        switch (c.eligibility.complex_config) {
            case ComplexConfig::TwoLinearConj: t = complex_two_linear(c, F); break;
            case ComplexConfig::ThreeQuadraticConjZero:
                t = complex_three_quadratic_zero(c, F);
                break;
            case ComplexConfig::ThreeQuadraticConjReal:
                t = complex_three_quadratic(c, F);
                break;
            default: throw usage_error("no conjugate configuration recorded");
        }
    } else {
        throw usage_error("unit_interval_transformation: pick a [0,1] variant");
    }
    t.variant = variant;
    t.caseinfo = c;
    return t;
}

Transformation compose_moebius(const Transformation& t, const Alg& lambda)
{
    if (lambda.sign() <= 0)
        throw domain_error("compose_moebius: lambda must be positive");
    if (t.variant == Variant::General)
        throw usage_error("compose_moebius: transformation must be a [0,1] variant");
    Cplx lam{lambda};
    Cplx one(1);
    // h(y) = y/((1-lambda) y + lambda)
    RatFnC h(PolyC(std::vector<Cplx>{Cplx(0), one}),
             PolyC(std::vector<Cplx>{lam, one - lam}));
    // h^-1(x) = lambda x/((lambda-1) x + 1)
    RatFnC hinv(PolyC(std::vector<Cplx>{Cplx(0), lam}),
                PolyC(std::vector<Cplx>{one, lam - one}));
    Transformation r = t;
    r.g = compose(t.g, h);
    r.gInverse = evaluate_at(hinv, t.gInverse);
    if (t.gInverseAlt)
        r.gInverseAlt = evaluate_at(hinv, *t.gInverseAlt);
    if (t.liftedInverse)
        r.liftedInverse = evaluate_at(hinv, *t.liftedInverse);
    if (t.liftedInverseAlt)
        r.liftedInverseAlt = evaluate_at(hinv, *t.liftedInverseAlt);
    for (RatFnC& im : r.sqrtImages)
        im = compose(im, h);
    for (Transformation::Split& s : r.splitImages) {
        s.re = compose(s.re, h);
        s.im = s.im.is_zero() ? s.im : compose(s.im, h);
    }
    return r;
}

}  // namespace radix
