#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>

#include "radix/rational_function.hpp"

namespace radix {

/// Shared context: the radicand polynomials f_1..f_k behind the formal
/// square-root symbols r_1..r_k.
template <class K>
struct SqrtCtx {
    std::vector<Poly<K>> radicands;
};

/// Element of C(x)[r_1..r_k] / (r_i^2 - f_i(x)): multilinear expansion,
/// subset mask -> rational-function coefficient.
template <class K>
class SqrtExpr {
public:
    using Ctx = std::shared_ptr<const SqrtCtx<K>>;

    SqrtExpr() = default;
    explicit SqrtExpr(Ctx ctx) : ctx_(std::move(ctx)) {}
    SqrtExpr(Ctx ctx, RatFn<K> scalar) : ctx_(std::move(ctx))
    {
        if (!scalar.is_zero())
            terms_[0] = std::move(scalar);
    }

    static SqrtExpr symbol(Ctx ctx, unsigned i)
    {
        SqrtExpr e(ctx);
        e.terms_[1u << i] = RatFn<K>(K(1));
        return e;
    }
    static SqrtExpr monomial(Ctx ctx, unsigned mask, RatFn<K> coeff)
    {
        SqrtExpr e(ctx);
        if (!coeff.is_zero())
            e.terms_[mask] = std::move(coeff);
        return e;
    }

    const Ctx& ctx() const { return ctx_; }
    const std::map<unsigned, RatFn<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    RatFn<K> rational_part() const
    {
        auto it = terms_.find(0);
        return it == terms_.end() ? RatFn<K>() : it->second;
    }

    SqrtExpr operator-() const
    {
        SqrtExpr r(ctx_);
        for (auto& [m, c] : terms_)
            r.terms_[m] = -c;
        return r;
    }
    friend SqrtExpr operator+(const SqrtExpr& a, const SqrtExpr& b)
    {
        SqrtExpr r = a;
        for (auto& [m, c] : b.terms_)
            r.add_term(m, c);
        if (!r.ctx_)
            r.ctx_ = b.ctx_;
        return r;
    }
    friend SqrtExpr operator-(const SqrtExpr& a, const SqrtExpr& b) { return a + (-b); }
    friend SqrtExpr operator*(const SqrtExpr& a, const SqrtExpr& b)
    {
        SqrtExpr r(a.ctx_ ? a.ctx_ : b.ctx_);
        for (auto& [m1, c1] : a.terms_)
            for (auto& [m2, c2] : b.terms_) {
                RatFn<K> c = c1 * c2;
                unsigned common = m1 & m2;
                for (unsigned i = 0; common >> i; ++i)
                    if (common & (1u << i))
                        c = c * RatFn<K>(r.ctx_->radicands[i]);
                r.add_term(m1 ^ m2, c);
            }
        return r;
    }
    SqrtExpr& operator+=(const SqrtExpr& o) { return *this = *this + o; }
    SqrtExpr& operator-=(const SqrtExpr& o) { return *this = *this - o; }
    SqrtExpr& operator*=(const SqrtExpr& o) { return *this = *this * o; }

    friend bool operator==(const SqrtExpr& a, const SqrtExpr& b) { return (a - b).is_zero(); }
    friend bool operator!=(const SqrtExpr& a, const SqrtExpr& b) { return !(a == b); }

    /// Inverse in the quotient algebra, by successive conjugation over each
    /// square-root symbol. Throws if the norm vanishes identically.
    SqrtExpr inverse() const
    {
        if (terms_.empty())
            throw domain_error("SqrtExpr: inverse of zero");
        unsigned used = 0;
        for (auto& [m, c] : terms_)
            used |= m;
        if (used == 0)
            return SqrtExpr(ctx_, terms_.begin()->second.inv());
        unsigned b = 0;
        while (!(used & (1u << b)))
            ++b;
        SqrtExpr A(ctx_), B(ctx_);
        for (auto& [m, c] : terms_) {
            if (m & (1u << b))
                B.add_term(m & ~(1u << b), c);
            else
                A.add_term(m, c);
        }
        SqrtExpr D = A * A - B * B * SqrtExpr(ctx_, RatFn<K>(ctx_->radicands[b]));
        if (D.is_zero())
            throw domain_error("SqrtExpr: norm vanishes identically (zero divisor)");
        SqrtExpr Dinv = D.inverse();
        SqrtExpr Br = B;
        Br.shift_mask(1u << b);
        return (A - Br) * Dinv;
    }

    /// Substitute x -> g(y) and r_i -> root_i(y); the roots must satisfy
    /// root_i(y)^2 = f_i(g(y)) for the result to be meaningful.
    RatFn<K> substitute(const RatFn<K>& g, const std::vector<RatFn<K>>& roots) const
    {
        RatFn<K> out;
        for (auto& [m, c] : terms_) {
            RatFn<K> t = compose(c, g);
            for (unsigned i = 0; m >> i; ++i)
                if (m & (1u << i))
                    t = t * roots[i];
            out = out + t;
        }
        return out;
    }

    /// Numeric evaluation with principal square roots.
    std::complex<double> eval(std::complex<double> x,
                              const std::vector<std::complex<double>>& root_values,
                              const std::function<std::complex<double>(const RatFn<K>&, std::complex<double>)>&
                                  eval_ratfn) const
    {
        std::complex<double> out = 0;
        for (auto& [m, c] : terms_) {
            std::complex<double> t = eval_ratfn(c, x);
            for (unsigned i = 0; m >> i; ++i)
                if (m & (1u << i))
                    t *= root_values[i];
            out += t;
        }
        return out;
    }

private:
    void add_term(unsigned m, const RatFn<K>& c)
    {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero())
                terms_[m] = c;
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
    void shift_mask(unsigned bit)
    {
        std::map<unsigned, RatFn<K>> t;
        for (auto& [m, c] : terms_)
            t[m | bit] = c;
        terms_ = std::move(t);
    }

    Ctx ctx_;
    std::map<unsigned, RatFn<K>> terms_;
};

/// Evaluate a rational function at a SqrtExpr argument inside the quotient
/// algebra.
template <class K>
SqrtExpr<K> evaluate_at(const RatFn<K>& f, const SqrtExpr<K>& x)
{
    auto horner = [&](const Poly<K>& p) {
        SqrtExpr<K> v(x.ctx());
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            v = v * x + SqrtExpr<K>(x.ctx(), RatFn<K>(*it));
        return v;
    };
    SqrtExpr<K> n = horner(f.num());
    SqrtExpr<K> d = horner(f.den());
    return n * d.inverse();
}

using SqrtExprC = SqrtExpr<Cplx>;
using SqrtCtxC = SqrtCtx<Cplx>;

}  // namespace radix
