#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace radix {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int sign(const Rat& q) { return q.sign(); }

inline Rat abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Exact square root of a rational, if it is a perfect square.
inline std::optional<Rat> rat_sqrt(const Rat& q)
{
    if (q < 0)
        return std::nullopt;
    Int n = numerator(q), d = denominator(q);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d)
        return std::nullopt;
    return Rat(sn, sd);
}

inline Rat rat_pow(const Rat& q, long e)
{
    if (e < 0) {
        if (q == 0)
            throw domain_error("rat_pow: 0^negative");
        return Rat(1) / rat_pow(q, -e);
    }
    Rat r = 1, b = q;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1)
            r *= b;
        b *= b;
    }
    return r;
}

/// Closed rational interval, the workhorse behind exact sign determination
/// of tower elements.
struct Ival {
    Rat lo, hi;

    Ival() : lo(0), hi(0) {}
    Ival(Rat v) : lo(v), hi(v) {}
    Ival(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    Rat width() const { return hi - lo; }

    friend Ival operator+(const Ival& a, const Ival& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend Ival operator-(const Ival& a, const Ival& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend Ival operator*(const Ival& a, const Ival& b)
    {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Rat lo = p1, hi = p1;
        for (const Rat* p : {&p2, &p3, &p4}) {
            if (*p < lo) lo = *p;
            if (*p > hi) hi = *p;
        }
        return {lo, hi};
    }
};

/// Enclosure of sqrt(q) with width <= 4^-prec, for q >= 0.
Ival ival_sqrt_point(const Rat& q, unsigned prec);

/// Enclosure of sqrt over an interval with nonnegative upper bound.
/// A slightly negative lower bound (numeric slack) is clamped to zero.
Ival ival_sqrt(const Ival& v, unsigned prec);

}  // namespace radix
