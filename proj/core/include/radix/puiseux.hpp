#pragma once

#include <numeric>

#include "radix/rational_function.hpp"

namespace radix {

/// Truncated Puiseux series: sum of c[k] * x^((lead+k)/ram) for
/// k = 0..len-1, known modulo O(x^(ord/ram)). Order bookkeeping is
/// conservative: operations never overstate the truncation order.
template <class K>
class Puiseux {
public:
    Puiseux() : ram_(1), lead_(0), ord_(0) {}
    Puiseux(long ram, long lead, std::vector<K> coeffs, long ord)
        : ram_(ram), lead_(lead), c_(std::move(coeffs)), ord_(ord)
    {
        if (ram_ < 1)
            throw domain_error("Puiseux: ramification must be >= 1");
        clip();
    }

    static Puiseux zero(long ord, long ram = 1) { return Puiseux(ram, ord, {}, ord); }
    static Puiseux constant(const K& v, long ord)
    {
        return Puiseux(1, 0, std::vector<K>{v}, ord);
    }
    static Puiseux variable(long ord)
    {
        return Puiseux(1, 1, std::vector<K>{K(1)}, ord);
    }

    long ram() const { return ram_; }
    long lead() const { return lead_; }
    long ord() const { return ord_; }
    bool is_zero() const
    {
        for (const K& v : c_)
            if (!v.is_zero())
                return false;
        return true;
    }
    /// Exponent (in units of 1/ram) of the first nonzero coefficient.
    long valuation() const
    {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero())
                return lead_ + long(i);
        return ord_;
    }
    K coeff_at(long num, long den = 1) const
    {
        // coefficient of x^(num/den)
        if ((num * ram_) % den != 0)
            return K(0);
        long e = num * ram_ / den;
        if (e < lead_ || e >= lead_ + long(c_.size()))
            return K(0);
        return c_[size_t(e - lead_)];
    }

    Puiseux with_ram(long r) const
    {
        if (r % ram_ != 0)
            throw domain_error("Puiseux: incompatible ramification");
        long f = r / ram_;
        if (f == 1)
            return *this;
        std::vector<K> c(c_.size() ? (c_.size() - 1) * size_t(f) + 1 : 0, K(0));
        for (size_t i = 0; i < c_.size(); ++i)
            c[i * size_t(f)] = c_[i];
        return Puiseux(r, lead_ * f, std::move(c), ord_ * f);
    }

    Puiseux truncated(long ord) const
    {
        Puiseux r = *this;
        r.ord_ = std::min(ord_, ord);
        r.clip();
        return r;
    }

    Puiseux operator-() const
    {
        Puiseux r = *this;
        for (K& v : r.c_)
            v = -v;
        return r;
    }

    friend Puiseux operator+(const Puiseux& a, const Puiseux& b)
    {
        long r = std::lcm(a.ram_, b.ram_);
        Puiseux x = a.with_ram(r), y = b.with_ram(r);
        long lead = std::min(x.lead_, y.lead_);
        long ord = std::min(x.ord_, y.ord_);
        std::vector<K> c(size_t(std::max(long(0), ord - lead)), K(0));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            long e = x.lead_ + long(i);
            if (e < ord)
                c[size_t(e - lead)] += x.c_[i];
        }
        for (size_t i = 0; i < y.c_.size(); ++i) {
            long e = y.lead_ + long(i);
            if (e < ord)
                c[size_t(e - lead)] += y.c_[i];
        }
        return Puiseux(r, lead, std::move(c), ord);
    }
    friend Puiseux operator-(const Puiseux& a, const Puiseux& b) { return a + (-b); }

    friend Puiseux operator*(const Puiseux& a, const Puiseux& b)
    {
        long r = std::lcm(a.ram_, b.ram_);
        Puiseux x = a.with_ram(r), y = b.with_ram(r);
        long va = x.valuation(), vb = y.valuation();
        long ord = std::min(x.ord_ + vb, y.ord_ + va);
        long lead = va + vb;
        std::vector<K> c(size_t(std::max(long(0), ord - lead)), K(0));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero())
                continue;
            for (size_t j = 0; j < y.c_.size(); ++j) {
                long e = x.lead_ + long(i) + y.lead_ + long(j);
                if (e >= lead && e < ord)
                    c[size_t(e - lead)] += x.c_[i] * y.c_[j];
            }
        }
        return Puiseux(r, lead, std::move(c), ord);
    }

    /// Multiplicative inverse; the series must not vanish identically.
    Puiseux inverse() const
    {
        long v = valuation();
        if (v >= ord_)
            throw domain_error("Puiseux inverse: series is zero to truncation order");
        // normalize to a unit u with u(0) != 0: self = x^(v/ram) * u
        long n = ord_ - v;  // coefficients we can produce
        std::vector<K> u(size_t(n), K(0));
        for (long i = 0; i < n; ++i)
            u[size_t(i)] = coeff_raw(v + i);
        std::vector<K> w(size_t(n), K(0));
        K inv0 = u[0].inv();
        w[0] = inv0;
        for (long i = 1; i < n; ++i) {
            K s(0);
            for (long j = 1; j <= i; ++j)
                s += u[size_t(j)] * w[size_t(i - j)];
            w[size_t(i)] = -(inv0 * s);
        }
        return Puiseux(ram_, -v, std::move(w), -v + n);
    }

    /// Substitute another series of positive valuation for the variable.
    /// Requires an unramified outer series (integer exponents, lead >= 0).
    Puiseux compose(const Puiseux& g) const
    {
        if (ram_ != 1 || lead_ < 0)
            throw domain_error("Puiseux compose: outer series must be an integer power series");
        if (g.valuation() <= 0)
            throw domain_error("Puiseux compose: inner series needs positive valuation");
        Puiseux acc = Puiseux::zero(g.ord_, g.ram_);
        for (size_t i = c_.size(); i-- > 0;) {
            acc = acc * g;
            acc = acc + Puiseux::constant(c_[i], acc.ord());
        }
        // x^lead factor
        for (long i = 0; i < lead_; ++i)
            acc = acc * g;
        long gord = ord_ * g.valuation();  // unknown tail of f enters at this order
        return acc.truncated(std::min(acc.ord(), gord));
    }

    /// Square root; the leading coefficient must possess a square root in the
    /// tower (extended through the field context by the caller beforehand).
    Puiseux sqrt(const K& lead_root) const
    {
        long v = valuation();
        if (v >= ord_)
            throw domain_error("Puiseux sqrt: series is zero to truncation order");
        long r = ram_, vv = v;
        Puiseux self = *this;
        if (v % 2 != 0) {
            self = with_ram(2 * ram_);
            r = self.ram_;
            vv = 2 * v;
        }
        long n = self.ord_ - vv;
        std::vector<K> u(size_t(n), K(0));
        for (long i = 0; i < n; ++i)
            u[size_t(i)] = self.coeff_raw(vv + i);
        // u = lead * (1 + tail); sqrt via the standard recurrence
        std::vector<K> w(size_t(n), K(0));
        if ((lead_root * lead_root - u[0]).is_zero() == false)
            throw domain_error("Puiseux sqrt: lead_root^2 != leading coefficient");
        w[0] = lead_root;
        K half = K(Rat(1, 2));
        K inv2w0 = (K(2) * w[0]).inv();
        (void)half;
        for (long i = 1; i < n; ++i) {
            K s(0);
            for (long j = 1; j < i; ++j)
                s += w[size_t(j)] * w[size_t(i - j)];
            w[size_t(i)] = (u[size_t(i)] - s) * inv2w0;
        }
        return Puiseux(r, vv / 2, std::move(w), vv / 2 + n);
    }

    std::string str(const std::string& var = "x") const
    {
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero())
                continue;
            long e = lead_ + long(i);
            if (!out.empty())
                out += " + ";
            out += "(" + c_[i].str() + ")*" + var;
            if (ram_ == 1)
                out += "^" + std::to_string(e);
            else
                out += "^(" + std::to_string(e) + "/" + std::to_string(ram_) + ")";
        }
        if (out.empty())
            out = "0";
        out += " + O(" + var + "^(" + std::to_string(ord_) + "/" + std::to_string(ram_) + "))";
        return out;
    }

private:
    K coeff_raw(long e) const
    {
        if (e < lead_ || e >= lead_ + long(c_.size()))
            return K(0);
        return c_[size_t(e - lead_)];
    }
    void clip()
    {
        if (lead_ + long(c_.size()) > ord_)
            c_.resize(size_t(std::max(long(0), ord_ - lead_)));
        while (!c_.empty() && c_.front().is_zero()) {
            c_.erase(c_.begin());
            ++lead_;
        }
    }
    long ram_, lead_;
    std::vector<K> c_;
    long ord_;
};

/// Laurent/Taylor expansion of a rational function around 0 to order ord.
template <class K>
Puiseux<K> series_of(const RatFn<K>& f, long ord)
{
    if (f.is_zero())
        return Puiseux<K>::zero(ord);
    auto poly_series = [&](const Poly<K>& p, long o) {
        std::vector<K> c;
        for (int i = 0; i <= p.degree(); ++i)
            c.push_back(p.coeff(i));
        return Puiseux<K>(1, 0, std::move(c), std::max(o, long(p.degree()) + 1));
    };
    long extra = ord + 4;
    Puiseux<K> n = poly_series(f.num(), extra).truncated(extra);
    Puiseux<K> d = poly_series(f.den(), extra).truncated(extra);
    return (n * d.inverse()).truncated(ord);
}

}  // namespace radix
