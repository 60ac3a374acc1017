#include "radix/algebraic.hpp"

#include <cassert>
#include <sstream>

namespace radix {

namespace {

using Coords = std::vector<Rat>;

const TowerLevel* level_at(const TowerPtr& t, int d)
{
    const TowerLevel* p = t.get();
    while (p && p->depth() > d)
        p = p->below().get();
    assert(p && p->depth() == d);
    return p;
}

Coords add_c(const Coords& a, const Coords& b)
{
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Coords neg_c(const Coords& a)
{
    Coords r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

bool zero_c(const Coords& a)
{
    for (const Rat& q : a)
        if (q != 0)
            return false;
    return true;
}

Coords mul_c(const TowerPtr& t, int d, const Coords& a, const Coords& b)
{
    if (d == 0)
        return {a[0] * b[0]};
    size_t half = size_t(1) << (d - 1);
    Coords a0(a.begin(), a.begin() + half), a1(a.begin() + half, a.end());
    Coords b0(b.begin(), b.begin() + half), b1(b.begin() + half, b.end());
    const TowerLevel* lvl = level_at(t, d);
    Coords t00 = mul_c(t, d - 1, a0, b0);
    Coords t11 = mul_c(t, d - 1, a1, b1);
    Coords t01 = mul_c(t, d - 1, a0, b1);
    Coords t10 = mul_c(t, d - 1, a1, b0);
    Coords lo = add_c(t00, mul_c(t, d - 1, t11, lvl->radicand().coords()));
    Coords hi = add_c(t01, t10);
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

Coords inv_c(const TowerPtr& t, int d, const Coords& a)
{
    if (d == 0) {
        if (a[0] == 0)
            throw domain_error("division by zero");
        return {Rat(1) / a[0]};
    }
    size_t half = size_t(1) << (d - 1);
    Coords a0(a.begin(), a.begin() + half), a1(a.begin() + half, a.end());
    if (zero_c(a1)) {
        Coords r = inv_c(t, d - 1, a0);
        r.resize(2 * half, Rat(0));
        return r;
    }
    const TowerLevel* lvl = level_at(t, d);
    // (a0 + a1*s)^-1 = (a0 - a1*s) / (a0^2 - rad*a1^2)
    Coords n = add_c(mul_c(t, d - 1, a0, a0),
                     neg_c(mul_c(t, d - 1, mul_c(t, d - 1, a1, a1), lvl->radicand().coords())));
    Coords ni = inv_c(t, d - 1, n);
    Coords lo = mul_c(t, d - 1, a0, ni);
    Coords hi = neg_c(mul_c(t, d - 1, a1, ni));
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

Ival eval_c(const Coords& a, int d, const std::vector<Ival>& gen, unsigned /*prec*/)
{
    if (d == 0)
        return Ival(a[0]);
    size_t half = size_t(1) << (d - 1);
    Coords a0(a.begin(), a.begin() + half), a1(a.begin() + half, a.end());
    Ival lo = eval_c(a0, d - 1, gen, 0);
    if (zero_c(a1))
        return lo;
    return lo + eval_c(a1, d - 1, gen, 0) * gen[d - 1];
}

}  // namespace

Ival ival_sqrt_point(const Rat& q, unsigned prec)
{
    if (q < 0)
        throw domain_error("ival_sqrt_point: negative");
    if (q == 0)
        return Ival(Rat(0));
    Int scale = Int(1) << (2 * prec);
    Int m = Int(numerator(q) * scale / denominator(q));
    Int s = sqrt(m);
    Int den = Int(1) << prec;
    return {Rat(s, den), Rat(s + 1, den)};
}

Ival ival_sqrt(const Ival& v, unsigned prec)
{
    Rat lo = v.lo < 0 ? Rat(0) : v.lo;
    Rat hi = v.hi < 0 ? Rat(0) : v.hi;
    return {ival_sqrt_point(lo, prec).lo, ival_sqrt_point(hi, prec).hi};
}

TowerLevel::TowerLevel(TowerPtr below, Alg radicand)
    : below_(std::move(below)), rad_(radicand.lifted(below_)), depth_(tower_depth(below_) + 1)
{
}

bool tower_is_prefix(const TowerPtr& a, const TowerPtr& b)
{
    const TowerLevel* p = b.get();
    int da = tower_depth(a);
    while (p && p->depth() > da)
        p = p->below().get();
    return p == a.get();
}

Alg::Alg(TowerPtr tower, std::vector<Rat> coords) : tower_(std::move(tower)), c_(std::move(coords))
{
    assert(c_.size() == (size_t(1) << tower_depth(tower_)));
}

bool Alg::is_zero() const { return zero_c(c_); }

bool Alg::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

Rat Alg::rational_value() const
{
    if (!is_rational())
        throw domain_error("not a rational value");
    return c_[0];
}

Alg Alg::lifted(const TowerPtr& t) const
{
    if (t.get() == tower_.get())
        return *this;
    if (!tower_is_prefix(tower_, t))
        throw usage_error("tower mismatch: cannot lift");
    Coords c = c_;
    c.resize(size_t(1) << tower_depth(t), Rat(0));
    return Alg(t, std::move(c));
}

namespace {
// Lift both operands into the deeper tower; throws if incompatible.
std::pair<Alg, Alg> align(const Alg& a, const Alg& b)
{
    if (a.tower().get() == b.tower().get())
        return {a, b};
    if (tower_is_prefix(a.tower(), b.tower()))
        return {a.lifted(b.tower()), b};
    if (tower_is_prefix(b.tower(), a.tower()))
        return {a, b.lifted(a.tower())};
    throw usage_error("tower mismatch: incompatible towers");
}
}  // namespace

Alg Alg::operator-() const { return Alg(tower_, neg_c(c_)); }

Alg operator+(const Alg& a, const Alg& b)
{
    auto [x, y] = align(a, b);
    return Alg(x.tower_, add_c(x.c_, y.c_));
}

Alg operator-(const Alg& a, const Alg& b) { return a + (-b); }

Alg operator*(const Alg& a, const Alg& b)
{
    auto [x, y] = align(a, b);
    return Alg(x.tower_, mul_c(x.tower_, x.depth(), x.c_, y.c_));
}

Alg Alg::inv() const { return Alg(tower_, inv_c(tower_, depth(), c_)); }

Alg operator/(const Alg& a, const Alg& b)
{
    auto [x, y] = align(a, b);
    return x * y.inv();
}

Alg Alg::pow(long e) const
{
    if (e < 0)
        return inv().pow(-e);
    Alg r(Rat(1)), b = *this;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1)
            r = r * b;
        b = b * b;
    }
    return r;
}

Ival Alg::interval(unsigned prec) const
{
    int d = depth();
    std::vector<Ival> gen(d);
    for (int k = 1; k <= d; ++k) {
        const TowerLevel* lvl = level_at(tower_, k);
        Ival rv = eval_c(lvl->radicand().coords(), k - 1, gen, prec);
        gen[k - 1] = ival_sqrt(rv, prec);
    }
    return eval_c(c_, d, gen, prec);
}

int Alg::sign() const
{
    if (is_zero())
        return 0;
    for (unsigned prec = 16;; prec *= 2) {
        Ival v = interval(prec);
        if (!v.contains_zero())
            return v.lo > 0 ? 1 : -1;
        if (prec > (1u << 14))
            throw domain_error("sign: interval refinement failed to separate from zero");
    }
}

double Alg::to_double() const
{
    Ival v = interval(64);
    Rat mid = (v.lo + v.hi) / 2;
    return mid.convert_to<double>();
}

std::optional<Alg> Alg::try_sqrt() const
{
    int d = depth();
    if (d == 0) {
        auto r = rat_sqrt(c_[0]);
        if (!r)
            return std::nullopt;
        return Alg(*r);
    }
    size_t half = c_.size() / 2;
    TowerPtr below = tower_->below();
    Alg a(below, Coords(c_.begin(), c_.begin() + half));
    Alg b(below, Coords(c_.begin() + half, c_.end()));
    const Alg& rad = tower_->radicand();
    auto join = [&](const Alg& lo, const Alg& hi) {
        Coords c = lo.lifted(below).coords();
        Coords h = hi.lifted(below).coords();
        c.insert(c.end(), h.begin(), h.end());
        return Alg(tower_, std::move(c));
    };
    auto normalize = [](Alg y) { return y.sign() < 0 ? -y : y; };
    if (b.is_zero()) {
        if (auto u = a.try_sqrt())
            return normalize(u->lifted(tower_));
        // a = c^2 * rad  ->  sqrt(a) = c * sqrt(rad)
        if (auto c = (a / rad).try_sqrt())
            return normalize(join(Alg(Rat(0)).lifted(below), *c));
        return std::nullopt;
    }
    // (u + v*s)^2 = a + b*s  with s = sqrt(rad):
    //   norm a^2 - b^2*rad must be a square n^2, then u^2 = (a +- n)/2.
    Alg nsq = a * a - b * b * rad;
    auto n = nsq.try_sqrt();
    if (!n)
        return std::nullopt;
    for (const Alg& s : {*n, -*n}) {
        Alg usq = (a + s) / Alg(Rat(2));
        if (auto u = usq.try_sqrt()) {
            if (u->is_zero())
                continue;
            Alg v = b / (Alg(Rat(2)) * *u);
            return normalize(join(*u, v));
        }
    }
    return std::nullopt;
}

std::string Alg::str() const
{
    if (is_rational())
        return c_[0].str();
    int d = depth();
    size_t half = c_.size() / 2;
    TowerPtr below = tower_->below();
    Alg a(below, Coords(c_.begin(), c_.begin() + half));
    Alg b(below, Coords(c_.begin() + half, c_.end()));
    std::ostringstream os;
    bool have = false;
    if (!a.is_zero()) {
        os << a.str();
        have = true;
    }
    if (!b.is_zero()) {
        if (have)
            os << " + ";
        os << "(" << b.str() << ")*sqrt(" << tower_->radicand().str() << ")";
    }
    (void)d;
    return os.str();
}

Cplx Cplx::pow(long e) const
{
    if (e < 0)
        return inv().pow(-e);
    Cplx r(Rat(1)), b = *this;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1)
            r = r * b;
        b = b * b;
    }
    return r;
}

std::string Cplx::str() const
{
    if (im.is_zero())
        return re.str();
    std::ostringstream os;
    if (!re.is_zero())
        os << re.str() << " + ";
    os << "(" << im.str() << ")*I";
    return os.str();
}

Alg Field::lift(const Alg& x) const { return x.lifted(t_); }

void Field::absorb(const TowerPtr& t)
{
    if (tower_is_prefix(t_, t)) {
        t_ = t;
        return;
    }
    if (!tower_is_prefix(t, t_))
        throw domain_error("Field::absorb: incompatible towers");
}

Alg Field::sqrt(const Alg& x0)
{
    Alg x = lift(x0);
    int s = x.sign();
    if (s == 0)
        return Alg(Rat(0)).lifted(t_);
    if (s < 0)
        throw domain_error("Field::sqrt: negative radicand");
    if (auto y = x.try_sqrt())
        return *y;
    t_ = std::make_shared<TowerLevel>(t_, x);
    size_t half = size_t(1) << (tower_depth(t_) - 1);
    std::vector<Rat> c(2 * half, Rat(0));
    c[half] = 1;
    return Alg(t_, std::move(c));
}

Cplx Field::sqrt_any(const Alg& x)
{
    if (x.sign() < 0)
        return {lift(Alg(Rat(0))), sqrt(-x)};
    return {sqrt(x), lift(Alg(Rat(0)))};
}

Cplx Field::sqrt(const Cplx& z0)
{
    Cplx z = lift(z0);
    if (z.im.is_zero())
        return sqrt_any(z.re);
    Alg m = sqrt(z.norm2());
    Alg two(Rat(2));
    Alg u = sqrt((lift(m) + lift(z.re)) / two);
    Alg v = sqrt((lift(m) - lift(z.re)) / two);
    if (z.im.sign() < 0)
        v = -v;
    return {lift(u), lift(v)};
}

}  // namespace radix
