#pragma once

#include <optional>

#include "radix/polynomial.hpp"

namespace radix {

/// Quotient of polynomials in canonical form: gcd(num, den) = 1, den monic.
template <class K>
class RatFn {
public:
    RatFn() : num_(), den_(K(1)) {}
    RatFn(Poly<K> num) : num_(std::move(num)), den_(K(1)) {}
    RatFn(K c) : num_(std::move(c)), den_(K(1)) {}
    RatFn(const Rat& q) : num_(K(q)), den_(K(1)) {}
    RatFn(long n) : num_(K(n)), den_(K(1)) {}
    RatFn(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFn variable() { return RatFn(Poly<K>::variable()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    int degree() const { return std::max(num_.degree(), den_.degree()); }

    RatFn operator-() const { return RatFn(-num_, den_, nocheck{}); }
    friend RatFn operator+(const RatFn& a, const RatFn& b)
    {
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b)
    {
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b)
    {
        if (b.is_zero())
            throw domain_error("division by zero rational function");
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

    friend bool operator==(const RatFn& a, const RatFn& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    RatFn inv() const
    {
        if (is_zero())
            throw domain_error("inverse of zero rational function");
        return RatFn(den_, num_);
    }

    RatFn derivative() const
    {
        return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K operator()(const K& x) const
    {
        K d = den_(x);
        if (d.is_zero())
            throw domain_error("evaluation at a pole");
        return num_(x) * d.inv();
    }

    RatFn pow(long e) const
    {
        if (e < 0)
            return inv().pow(-e);
        RatFn r(K(1)), b = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1)
                r = r * b;
            b = b * b;
        }
        return r;
    }

    std::string str(const std::string& var = "x") const
    {
        if (is_polynomial())
            return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    struct nocheck {};
    RatFn(Poly<K> num, Poly<K> den, nocheck) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize()
    {
        if (den_.is_zero())
            throw domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        K l = den_.leading().inv();
        num_ = l * num_;
        den_ = l * den_;
    }
    Poly<K> num_, den_;
};

/// Substitute g into f; throws if den(f) composed with g vanishes identically.
template <class K>
RatFn<K> compose(const RatFn<K>& f, const RatFn<K>& g)
{
    RatFn<K> n, d;
    for (auto it = f.num().coeffs().rbegin(); it != f.num().coeffs().rend(); ++it)
        n = n * g + RatFn<K>(*it);
    for (auto it = f.den().coeffs().rbegin(); it != f.den().coeffs().rend(); ++it)
        d = d * g + RatFn<K>(*it);
    if (d.is_zero())
        throw domain_error("compose: denominator collapses to zero");
    return n / d;
}

template <class K>
RatFn<K> compose(const Poly<K>& f, const RatFn<K>& g)
{
    return compose(RatFn<K>(f), g);
}

/// If f = c * h^2 with h monic-normalized, return (c, h).
template <class K>
std::optional<std::pair<K, RatFn<K>>> is_square(const RatFn<K>& f)
{
    if (f.is_zero())
        throw domain_error("is_square: zero input");
    auto n = squarefree_part(f.num());
    auto d = squarefree_part(f.den());
    if (n.odd.degree() > 0 || d.odd.degree() > 0)
        return std::nullopt;
    K c = n.constant * d.constant.inv();
    return std::make_pair(c, RatFn<K>(n.square, d.square));
}

inline RatFn<Cplx> to_complex(const RatFn<Alg>& f)
{
    return RatFn<Cplx>(to_complex(f.num()), to_complex(f.den()));
}

inline RatFn<Alg> to_real(const RatFn<Cplx>& f)
{
    return RatFn<Alg>(to_real(f.num()), to_real(f.den()));
}

inline RatFn<Cplx> conj(const RatFn<Cplx>& f)
{
    return RatFn<Cplx>(conj(f.num()), conj(f.den()));
}

using PolyC = Poly<Cplx>;
using PolyR = Poly<Alg>;
using RatFnC = RatFn<Cplx>;
using RatFnR = RatFn<Alg>;

}  // namespace radix
