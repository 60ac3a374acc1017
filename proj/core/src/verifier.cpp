#include "radix/verifier.hpp"

#include <cmath>

#include "radix/puiseux.hpp"
#include "radix/sturm.hpp"

namespace radix {

namespace {

std::complex<double> eval_poly(const PolyC& p, std::complex<double> x)
{
    std::complex<double> v = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        v = v * x + std::complex<double>(it->re.to_double(), it->im.to_double());
    return v;
}

std::complex<double> eval_ratfn(const RatFnC& f, std::complex<double> x)
{
    return eval_poly(f.num(), x) / eval_poly(f.den(), x);
}

/// rewrite an expression over pairwise-product radicands in terms of the
/// single-root symbols of the lifted context
SqrtExprC lift_pairwise(const SqrtExprC& e, const std::shared_ptr<const SqrtCtxC>& lifted)
{
    const unsigned pair_mask[3] = {0b011, 0b101, 0b110};
    SqrtExprC out(lifted);
    for (const auto& [mask, c] : e.terms()) {
        SqrtExprC term(lifted, c);
        for (unsigned i = 0; i < 3; ++i)
            if (mask & (1u << i))
                term = term * SqrtExprC::monomial(lifted, pair_mask[i], RatFnC(Cplx(1)));
        out += term;
    }
    return out;
}

/// Evaluate sum c_i w^i D^(n-i) by Horner, everything polynomial.
SqrtExprC horner_cleared(const std::vector<Cplx>& coeffs, int n, const SqrtExprC& w,
                         const std::vector<PolyC>& Dpow)
{
    SqrtExprC v(w.ctx());
    for (int i = n; i >= 0; --i) {
        Cplx ci = i < int(coeffs.size()) ? coeffs[size_t(i)] : Cplx(0);
        v = v * w + SqrtExprC(w.ctx(), RatFnC(ci * Dpow[size_t(n - i)]));
    }
    return v;
}

}  // namespace

RationalizeReport verify_rationalizes(const Transformation& t, const RadicandSet& R)
{
    if (t.g.is_constant())
        throw domain_error("verify_rationalizes: g must be non-constant");
    RationalizeReport rep;
    rep.pass = true;
    for (const PolyC& f : R.reduced) {
        RationalizeEntry e;
        e.radicand = f;
        auto sq = is_square(compose(RatFnC(f), t.g));
        if (sq) {
            e.ok = true;
            e.constant = sq->first;
            e.image = sq->second;
        } else {
            rep.pass = false;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

InverseReport verify_inverse(const Transformation& t)
{
    InverseReport rep;
    SqrtExprC inv = t.liftedCtx ? lift_pairwise(t.gInverse, t.liftedCtx) : t.gInverse;
    const auto& ctx = inv.ctx();
    // clear denominators: inv = J / D with polynomial coefficients
    PolyC D(Cplx(1));
    for (const auto& [m, c] : inv.terms())
        D = D * (c.den() / gcd(D, c.den()));
    SqrtExprC J(ctx);
    for (const auto& [m, c] : inv.terms())
        J += SqrtExprC::monomial(ctx, m, RatFnC(c.num() * (D / c.den())));
    int n = std::max(t.g.num().degree(), t.g.den().degree());
    std::vector<PolyC> Dpow(size_t(n) + 1, PolyC(Cplx(1)));
    for (int i = 1; i <= n; ++i)
        Dpow[size_t(i)] = Dpow[size_t(i) - 1] * D;
    // g(inv) = x reduces to num(inv) - x*den(inv) = 0 once den(inv) != 0;
    // num and den of g are coprime, so both cannot vanish together
    PolyC X = PolyC::variable();
    SqrtExprC num_v = horner_cleared(t.g.num().coeffs(), n, J, Dpow);
    SqrtExprC den_v = horner_cleared(t.g.den().coeffs(), n, J, Dpow);
    SqrtExprC residual = num_v - SqrtExprC(ctx, RatFnC(X)) * den_v;
    if (residual.is_zero()) {
        rep.pass = true;
        return rep;
    }
    if (den_v.is_zero()) {
        rep.structural_failure = true;
        rep.detail = "denominator of g vanishes identically at the inverse";
        return rep;
    }
    rep.detail = "g(gInverse(x)) - x reduces to a nonzero element";
    return rep;
}

BijectionCertificate verify_unit_interval_bijection(const Transformation& t)
{
    BijectionCertificate cert;
    auto fail = [&](const std::string& why) {
        cert.failing = why;
        return cert;
    };
    for (const Cplx& c : t.g.num().coeffs())
        if (!c.is_real())
            return fail("g has non-real coefficients");
    for (const Cplx& c : t.g.den().coeffs())
        if (!c.is_real())
            return fail("g has non-real coefficients");
    RatFnR g = to_real(t.g);
    Alg zero(0), one(1);
    if (!g.den()(zero).is_zero() && !g.den()(one).is_zero() &&
        g(zero) == zero && g(one) == one)
        cert.endpoints_ok = true;
    else
        return fail("g(0) = 0 or g(1) = 1 fails");
    PolyR d = g.den();
    if (d.degree() > 0) {
        PolyR sf = d / gcd(d, d.derivative());
        if (sturm_root_count(sf, zero, one) != 0)
            return fail("denominator of g has a root in (0,1)");
    }
    cert.denominator_ok = true;
    RatFnR gp = g.derivative();
    Alg half{Rat(1, 2)};
    if (gp.num()(half).sign() * gp.den()(half).sign() <= 0)
        return fail("g' is not positive at 1/2");
    PolyR n = gp.num();
    while (n(zero).is_zero())
        n = n / PolyR::variable();
    while (n(one).is_zero())
        n = n / PolyR::linear(one);
    PolyR nsf = n.degree() > 0 ? n / gcd(n, n.derivative()) : n;
    if (nsf.degree() > 0 && sturm_root_count(nsf, zero, one) != 0)
        return fail("g' changes sign inside (0,1)");
    cert.increasing_ok = true;
    cert.pass = true;
    return cert;
}

bool verify_puiseux_branch(const Transformation& t, long order)
{
    const long work = order + 4;
    size_t k = t.sqrtImages.size();
    if (t.ctx->radicands != t.imageRadicands)
        return false;  // needs rational images for the ctx radicands themselves
    std::vector<Puiseux<Cplx>> base;
    for (const RatFnC& im : t.sqrtImages)
        base.push_back(series_of(im, work));
    std::vector<Puiseux<Cplx>> coeff_series;
    std::vector<unsigned> masks;
    for (const auto& [mask, coeff] : t.gInverse.terms()) {
        masks.push_back(mask);
        coeff_series.push_back(series_of(compose(coeff, t.g), work));
    }
    for (unsigned signs = 0; signs < (1u << k); ++signs) {
        Puiseux<Cplx> sum = Puiseux<Cplx>::zero(work);
        for (size_t j = 0; j < masks.size(); ++j) {
            Puiseux<Cplx> term = coeff_series[j];
            for (size_t i = 0; i < k; ++i)
                if (masks[j] & (1u << i))
                    term = term * ((signs >> i) & 1 ? -base[i] : base[i]);
            sum = sum + term;
        }
        Puiseux<Cplx> diff = sum - Puiseux<Cplx>::variable(work);
        if (diff.ord() >= order * diff.ram() &&
            (diff.is_zero() || diff.valuation() >= order * diff.ram()))
            return true;
    }
    return false;
}

double inverse_probe(const Transformation& t, double x)
{
    std::vector<std::complex<double>> roots;
    for (const PolyC& f : t.ctx->radicands)
        roots.push_back(std::sqrt(eval_poly(f, x)));
    std::complex<double> w = t.gInverse.eval(x, roots, eval_ratfn);
    return std::abs(eval_ratfn(t.g, w) - x);
}

}  // namespace radix
