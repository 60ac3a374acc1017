#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radix/algebraic.hpp"

namespace radix {

/// Dense univariate polynomial over a field K (Alg or Cplx).
/// Coefficients ascending; the zero polynomial has empty storage.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(K c) { coeffs_.push_back(std::move(c)); trim(); }
    Poly(const Rat& q) : Poly(K(q)) {}
    Poly(long n) : Poly(K(n)) {}
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<K>{K(0), K(1)}); }
    /// x - a
    static Poly linear(const K& a) { return Poly(std::vector<K>{-a, K(1)}); }

    const std::vector<K>& coeffs() const { return coeffs_; }
    int degree() const { return int(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const K& leading() const
    {
        if (is_zero())
            throw domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    K coeff(int i) const
    {
        if (i < 0 || i > degree())
            return K(0);
        return coeffs_[size_t(i)];
    }

    Poly operator-() const
    {
        std::vector<K> c;
        c.reserve(coeffs_.size());
        for (const K& a : coeffs_)
            c.push_back(-a);
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            c[i] += b.coeffs_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const K& s, const Poly& p)
    {
        std::vector<K> c;
        c.reserve(p.coeffs_.size());
        for (const K& a : p.coeffs_)
            c.push_back(s * a);
        return Poly(std::move(c));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        if (b.is_zero())
            throw domain_error("polynomial division by zero");
        Poly r = a;
        std::vector<K> q(a.degree() >= b.degree() ? size_t(a.degree() - b.degree() + 1) : 0, K(0));
        K linv = b.leading().inv();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            K f = r.leading() * linv;
            q[size_t(k)] = f;
            // r -= f * x^k * b
            std::vector<K> rc = r.coeffs_;
            for (size_t i = 0; i < b.coeffs_.size(); ++i)
                rc[i + size_t(k)] -= f * b.coeffs_[i];
            rc.pop_back();
            r = Poly(std::move(rc));
        }
        return {Poly(std::move(q)), r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const
    {
        if (is_zero())
            return *this;
        return leading().inv() * *this;
    }

    Poly derivative() const
    {
        if (coeffs_.size() <= 1)
            return Poly();
        std::vector<K> c(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i)
            c[i - 1] = K(Rat(long(i))) * coeffs_[i];
        return Poly(std::move(c));
    }

    K operator()(const K& x) const
    {
        K v(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            v = v * x + *it;
        return v;
    }

    Poly compose(const Poly& g) const
    {
        Poly v;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            v = v * g + Poly(*it);
        return v;
    }

    Poly pow(long e) const
    {
        Poly r(K(1)), b = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1)
                r = r * b;
            b = b * b;
        }
        return r;
    }

    std::string str(const std::string& var = "x") const;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }
    std::vector<K> coeffs_;
};

template <class K>
Poly<K> gcd(const Poly<K>& a, const Poly<K>& b)
{
    Poly<K> x = a, y = b;
    while (!y.is_zero()) {
        Poly<K> r = x % y;
        x = y;
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

/// Yun squarefree decomposition: p = c * prod a_i^i with a_i monic squarefree
/// and pairwise coprime. Returns (c, [a_1, a_2, ...]).
template <class K>
std::pair<K, std::vector<Poly<K>>> squarefree_decomposition(const Poly<K>& p)
{
    if (p.is_zero())
        throw domain_error("squarefree decomposition of zero polynomial");
    K c = p.leading();
    Poly<K> f = p.monic();
    std::vector<Poly<K>> out;
    if (f.degree() == 0)
        return {c, out};
    Poly<K> fp = f.derivative();
    Poly<K> g = gcd(f, fp);
    Poly<K> w = f / g;
    Poly<K> z = fp / g - w.derivative();
    while (!(w.degree() == 0)) {
        Poly<K> ai = gcd(w, z);
        out.push_back(ai.monic());
        w = w / ai;
        z = z / ai - w.derivative();
    }
    return {c, out};
}

/// Odd-multiplicity split: p = c * s * q^2 with s monic squarefree.
template <class K>
struct SquarefreePart {
    K constant;
    Poly<K> odd;     // s
    Poly<K> square;  // q
};

template <class K>
SquarefreePart<K> squarefree_part(const Poly<K>& p)
{
    auto [c, factors] = squarefree_decomposition(p);
    Poly<K> s{K(1)}, q{K(1)};
    for (size_t i = 0; i < factors.size(); ++i) {
        long mult = long(i) + 1;
        if (mult % 2)
            s = s * factors[i];
        q = q * factors[i].pow(mult / 2);
    }
    return {c, s.monic(), q.monic()};
}

template <class K>
std::string Poly<K>::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        K a = coeff(i);
        if (a.is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        std::string cs = a.str();
        if (cs.find_first_of("+-*/ ") != std::string::npos && i > 0)
            cs = "(" + cs + ")";
        if (i == 0)
            out += cs;
        else {
            if (cs != "1")
                out += cs + "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline Poly<Cplx> to_complex(const Poly<Alg>& p)
{
    std::vector<Cplx> c;
    c.reserve(p.coeffs().size());
    for (const Alg& a : p.coeffs())
        c.emplace_back(a);
    return Poly<Cplx>(std::move(c));
}

/// Requires all coefficients real.
inline Poly<Alg> to_real(const Poly<Cplx>& p)
{
    std::vector<Alg> c;
    c.reserve(p.coeffs().size());
    for (const Cplx& a : p.coeffs()) {
        if (!a.is_real())
            throw domain_error("to_real: non-real coefficient");
        c.push_back(a.re);
    }
    return Poly<Alg>(std::move(c));
}

inline Poly<Cplx> conj(const Poly<Cplx>& p)
{
    std::vector<Cplx> c;
    c.reserve(p.coeffs().size());
    for (const Cplx& a : p.coeffs())
        c.push_back(a.conj());
    return Poly<Cplx>(std::move(c));
}

}  // namespace radix
