#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "radix/rational.hpp"

namespace radix {

class TowerLevel;
using TowerPtr = std::shared_ptr<const TowerLevel>;

inline int tower_depth(const TowerPtr& t);

/// Element of a tower of real quadratic extensions Q(sqrt(d1))...(sqrt(dm)).
/// Coordinates are stored over the multiplicative basis of square-root
/// products; index bit k selects the generator adjoined at level k+1.
/// The trivial tower (nullptr) is Q itself.
class Alg {
public:
    Alg() : c_{Rat(0)} {}
    Alg(const Rat& q) : c_{q} {}
    Alg(long n) : c_{Rat(n)} {}
    Alg(int n) : c_{Rat(n)} {}
    Alg(TowerPtr tower, std::vector<Rat> coords);

    const TowerPtr& tower() const { return tower_; }
    int depth() const { return tower_depth(tower_); }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Rational value; throws unless is_rational().
    Rat rational_value() const;

    /// Lift into a deeper tower of which the current one is a prefix.
    Alg lifted(const TowerPtr& t) const;

    Alg operator-() const;
    friend Alg operator+(const Alg& a, const Alg& b);
    friend Alg operator-(const Alg& a, const Alg& b);
    friend Alg operator*(const Alg& a, const Alg& b);
    friend Alg operator/(const Alg& a, const Alg& b);
    Alg& operator+=(const Alg& o) { return *this = *this + o; }
    Alg& operator-=(const Alg& o) { return *this = *this - o; }
    Alg& operator*=(const Alg& o) { return *this = *this * o; }
    Alg& operator/=(const Alg& o) { return *this = *this / o; }

    Alg inv() const;
    Alg pow(long e) const;

    friend bool operator==(const Alg& a, const Alg& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Alg& a, const Alg& b) { return !(a == b); }
    friend bool operator<(const Alg& a, const Alg& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const Alg& a, const Alg& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const Alg& a, const Alg& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const Alg& a, const Alg& b) { return (a - b).sign() >= 0; }

    /// Exact sign: -1, 0, +1. Zero is decided syntactically, nonzero by
    /// interval refinement (guaranteed to terminate).
    int sign() const;

    /// Rational enclosure of width <= 4^-prec.
    Ival interval(unsigned prec) const;
    double to_double() const;

    /// Square root within the same tower, if one exists there.
    /// The returned root is normalized nonnegative.
    std::optional<Alg> try_sqrt() const;

    std::string str() const;

private:
    TowerPtr tower_;
    std::vector<Rat> c_;
};

class TowerLevel {
public:
    TowerLevel(TowerPtr below, Alg radicand);
    const TowerPtr& below() const { return below_; }
    const Alg& radicand() const { return rad_; }
    int depth() const { return depth_; }

private:
    TowerPtr below_;
    Alg rad_;  // element over below_, positive, not a square there
    int depth_;
};

inline int tower_depth(const TowerPtr& t) { return t ? t->depth() : 0; }

/// True iff `a` is an initial segment of `b` (or equal).
bool tower_is_prefix(const TowerPtr& a, const TowerPtr& b);

/// Complex number as a pair over a real tower.
struct Cplx {
    Alg re, im;

    Cplx() = default;
    Cplx(Alg r) : re(std::move(r)) {}
    Cplx(Alg r, Alg i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(const Rat& q) : re(q) {}
    Cplx(long n) : re(n) {}
    Cplx(int n) : re(n) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    Cplx conj() const { return {re, -im}; }
    Alg norm2() const { return re * re + im * im; }

    Cplx operator-() const { return {-re, -im}; }
    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Cplx inv() const
    {
        Alg n = norm2();
        if (n.is_zero())
            throw domain_error("division by zero");
        Alg ni = n.inv();
        return {re * ni, -(im * ni)};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) { return a * b.inv(); }
    Cplx& operator+=(const Cplx& o) { return *this = *this + o; }
    Cplx& operator-=(const Cplx& o) { return *this = *this - o; }
    Cplx& operator*=(const Cplx& o) { return *this = *this * o; }
    Cplx& operator/=(const Cplx& o) { return *this = *this / o; }
    friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cplx& a, const Cplx& b) { return !(a == b); }
    friend bool operator<(const Cplx& a, const Cplx& b)
    {
        int s = (a.re - b.re).sign();
        if (s != 0)
            return s < 0;
        return a.im < b.im;
    }

    Cplx pow(long e) const;
    std::string str() const;
};

/// Mutable field context: owns the current tower and adjoins generators on
/// demand. Values created under earlier states of the context live in prefix
/// towers and remain usable.
class Field {
public:
    Field() = default;

    const TowerPtr& tower() const { return t_; }
    /// Continue building on top of an existing tower; towers must be nested.
    void absorb(const TowerPtr& t);
    Alg lift(const Alg& x) const;
    Cplx lift(const Cplx& z) const { return {lift(z.re), lift(z.im)}; }

    /// Square root of a nonnegative element; extends the tower if needed.
    Alg sqrt(const Alg& x);
    /// Square root of any real element; negative radicands go imaginary.
    Cplx sqrt_any(const Alg& x);
    /// Principal square root of a complex element via the re/im split.
    Cplx sqrt(const Cplx& z);

private:
    TowerPtr t_;
};

}  // namespace radix
