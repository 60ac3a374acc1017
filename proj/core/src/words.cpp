#include "radix/words.hpp"

#include <algorithm>
#include <complex>

namespace radix {

namespace {

std::complex<double> cd(const Cplx& z) { return {z.re.to_double(), z.im.to_double()}; }

std::complex<double> eval_poly(const PolyC& p, std::complex<double> x)
{
    std::complex<double> v = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        v = v * x + cd(*it);
    return v;
}

std::complex<double> eval_ratfn(const RatFnC& f, std::complex<double> x)
{
    return eval_poly(f.num(), x) / eval_poly(f.den(), x);
}

std::vector<Cplx> sorted(std::vector<Cplx> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

/// Order of vanishing of p at a.
int root_order(const PolyC& p, const Cplx& a)
{
    PolyC q = p;
    int m = 0;
    while (q.degree() >= 1 && q(a).is_zero()) {
        q = q / PolyC::linear(a);
        ++m;
    }
    return m;
}

}  // namespace

int base_half_order(const Letter& l, int basePoint)
{
    Cplx b(basePoint);
    auto in_set = [&](const std::vector<Cplx>& s) {
        return std::count(s.begin(), s.end(), b) > 0 ? 1 : 0;
    };
    switch (l.kind()) {
        case Letter::Kind::Rat:
            return l.pole() == b ? 2 : 0;
        case Letter::Kind::SqrtSet:
            return in_set(l.roots());
        case Letter::Kind::RatTimesSqrt:
            return (l.pole() == b ? 2 : 0) + in_set(l.roots());
        case Letter::Kind::PowerTimesSqrt:
            return in_set(l.roots()) - (basePoint == 0 ? 2 * l.power() : 0);
        case Letter::Kind::GenericRational:
            return 2 * (root_order(l.fn().den(), b) - root_order(l.fn().num(), b));
    }
    return 0;
}

namespace {

/// Pull the lowest-degree numerator coefficient out of f when it is real.
std::pair<Alg, RatFnC> extract_scalar(const RatFnC& f)
{
    if (f.is_zero())
        return {Alg(1), f};
    size_t i = 0;
    while (f.num().coeff(int(i)).is_zero())
        ++i;
    Cplx c = f.num().coeff(int(i));
    if (!c.is_real())
        return {Alg(1), f};
    return {c.re, RatFnC(c.inv()) * f};
}

void shuffle_rec(const std::vector<Letter>& a, size_t i, const std::vector<Letter>& b, size_t j,
                 std::vector<Letter>& cur, int base, const Alg& coeff, WordCombination& out)
{
    if (i == a.size() && j == b.size()) {
        IntegralWord w;
        w.letters = cur;
        w.basePoint = base;
        out.add(coeff, std::move(w));
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        shuffle_rec(a, i + 1, b, j, cur, base, coeff, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        shuffle_rec(a, i, b, j + 1, cur, base, coeff, out);
        cur.pop_back();
    }
}

/// Rational roots of a monic polynomial with rational coefficients, with
/// multiplicities; leaves other factors alone.
std::vector<std::pair<Cplx, int>> split_linear_factors(const PolyC& den)
{
    std::vector<std::pair<Cplx, int>> roots;
    PolyC rem = den;

    bool rational = true;
    for (const Cplx& c : rem.coeffs())
        if (!c.is_real() || !c.re.is_rational())
            rational = false;
    if (rational && rem.degree() >= 1) {
        int m = root_order(rem, Cplx(0));
        if (m > 0) {
            roots.emplace_back(Cplx(0), m);
            for (int k = 0; k < m; ++k)
                rem = rem / PolyC::variable();
        }
        // clear denominators, then candidates p/q with p | a0 and q | lead
        Int lead = 1;
        for (const Cplx& c : rem.coeffs())
            lead = lcm(lead, Int(denominator(c.re.rational_value())));
        std::vector<Int> ic;
        for (const Cplx& c : rem.coeffs())
            ic.push_back(Int(numerator(c.re.rational_value() * Rat(lead))));
        if (!ic.empty() && ic.front() != 0 && abs(ic.front()) < 1000000 &&
            abs(ic.back()) < 1000000) {
            auto divisors = [](Int n) {
                std::vector<Int> d;
                n = abs(n);
                for (Int i = 1; i * i <= n; ++i)
                    if (n % i == 0) {
                        d.push_back(i);
                        d.push_back(n / i);
                    }
                return d;
            };
            for (const Int& p : divisors(ic.front()))
                for (const Int& q : divisors(ic.back()))
                    for (int s : {1, -1}) {
                        Cplx cand{Alg(Rat(s * p, q))};
                        int m2 = root_order(rem, cand);
                        if (m2 > 0) {
                            roots.emplace_back(cand, m2);
                            for (int k = 0; k < m2; ++k)
                                rem = rem / PolyC::linear(cand);
                        }
                    }
        }
    }
    if (rem.degree() == 1) {
        roots.emplace_back(-rem.coeff(0) / rem.coeff(1), 1);
        rem = PolyC(Cplx(1));
    } else if (rem.degree() == 2) {
        bool real = rem.coeff(0).is_real() && rem.coeff(1).is_real() && rem.coeff(2).is_real();
        if (real) {
            Alg b = (rem.coeff(1) / rem.coeff(2)).re, c = (rem.coeff(0) / rem.coeff(2)).re;
            Alg disc = b * b - Alg(4) * c;
            auto r = (disc.sign() >= 0 ? disc : -disc).try_sqrt();
            if (r) {
                Alg half{Rat(1, 2)};
                if (disc.sign() >= 0) {
                    roots.emplace_back(Cplx((-b + *r) * half), 1);
                    if (!r->is_zero())
                        roots.emplace_back(Cplx((-b - *r) * half), 1);
                    else
                        roots.back().second = 2;
                } else {
                    roots.emplace_back(Cplx(-b * half, *r * half), 1);
                    roots.emplace_back(Cplx(-b * half, -(*r * half)), 1);
                }
            }
        }
    }
    return roots;
}

}  // namespace

int sign_constant(const Cplx& a, int basePoint)
{
    if (!a.is_real())
        return 1;
    if (basePoint == 0) {
        int s = (-a.re).sign();
        return s == 0 ? 1 : s;
    }
    int s = (Alg(1) - a.re).sign();
    return s == 0 ? -1 : s;
}

Letter Letter::rat(Cplx a)
{
    Letter l;
    l.kind_ = Kind::Rat;
    l.a_ = std::move(a);
    return l;
}

Letter Letter::sqrt_set(std::vector<Cplx> roots)
{
    if (roots.size() < 2)
        throw usage_error("sqrt_set letter needs at least two roots");
    roots = sorted(std::move(roots));
    for (size_t i = 0; i + 1 < roots.size(); ++i)
        if (roots[i] == roots[i + 1])
            throw usage_error("sqrt_set letter has a repeated root");
    Letter l;
    l.kind_ = Kind::SqrtSet;
    l.roots_ = std::move(roots);
    return l;
}

Letter Letter::rat_times_sqrt(Cplx a, std::vector<Cplx> roots)
{
    if (roots.empty())
        throw usage_error("rat_times_sqrt letter needs a nonempty root set");
    if (std::count(roots.begin(), roots.end(), a) > 0)
        throw usage_error("rat_times_sqrt pole must not lie in the root set");
    Letter l;
    l.kind_ = Kind::RatTimesSqrt;
    l.a_ = std::move(a);
    l.roots_ = sorted(std::move(roots));
    return l;
}

Letter Letter::power_times_sqrt(std::vector<Cplx> roots, int power)
{
    if (power < 1 || power > int(roots.size()) - 2)
        throw usage_error("power_times_sqrt exponent must lie in 1..k-2");
    Letter l;
    l.kind_ = Kind::PowerTimesSqrt;
    l.roots_ = sorted(std::move(roots));
    l.j_ = power;
    return l;
}

Letter Letter::generic(RatFnC f)
{
    Letter l;
    l.kind_ = Kind::GenericRational;
    l.fn_ = std::move(f);
    return l;
}

RatFnC Letter::squared(int basePoint) const
{
    auto recip = [&](const Cplx& a) {
        return RatFnC(PolyC(Cplx(sign_constant(a, basePoint))), PolyC::linear(a));
    };
    auto set_product = [&]() {
        RatFnC p(Cplx(1));
        for (const Cplx& a : roots_)
            p = p * recip(a);
        return p;
    };
    switch (kind_) {
        case Kind::Rat:
            return recip(a_) * recip(a_);
        case Kind::SqrtSet:
            return set_product();
        case Kind::RatTimesSqrt:
            return recip(a_) * recip(a_) * set_product();
        case Kind::PowerTimesSqrt: {
            PolyC x2j(Cplx(1));
            for (int k = 0; k < 2 * j_; ++k)
                x2j = x2j * PolyC::variable();
            return RatFnC(x2j) * set_product();
        }
        case Kind::GenericRational:
            return fn_ * fn_;
    }
    return RatFnC(Cplx(1));
}

std::complex<double> Letter::eval(double t, int basePoint) const
{
    auto recip = [&](const Cplx& a) {
        return double(sign_constant(a, basePoint)) / (t - cd(a));
    };
    auto set_product = [&]() {
        std::complex<double> p = 1;
        for (const Cplx& a : roots_)
            p *= std::sqrt(recip(a));
        return p;
    };
    switch (kind_) {
        case Kind::Rat:
            return recip(a_);
        case Kind::SqrtSet:
            return set_product();
        case Kind::RatTimesSqrt:
            return recip(a_) * set_product();
        case Kind::PowerTimesSqrt:
            return std::pow(t, j_) * set_product();
        case Kind::GenericRational:
            return eval_ratfn(fn_, t);
    }
    return 0;
}

std::string Letter::str() const
{
    auto set_str = [&]() {
        std::string s = "{";
        for (size_t i = 0; i < roots_.size(); ++i)
            s += (i ? "," : "") + roots_[i].str();
        return s + "}";
    };
    switch (kind_) {
        case Kind::Rat:
            return a_.str();
        case Kind::SqrtSet:
            return set_str();
        case Kind::RatTimesSqrt:
            return "(" + a_.str() + "," + set_str() + ")";
        case Kind::PowerTimesSqrt:
            return "(" + set_str() + "," + std::to_string(j_) + ")";
        case Kind::GenericRational:
            return fn_.str("u");
    }
    return "";
}

bool Letter::operator==(const Letter& o) const
{
    if (kind_ != o.kind_)
        return false;
    switch (kind_) {
        case Kind::Rat:
            return a_ == o.a_;
        case Kind::SqrtSet:
            return roots_ == o.roots_;
        case Kind::RatTimesSqrt:
            return a_ == o.a_ && roots_ == o.roots_;
        case Kind::PowerTimesSqrt:
            return roots_ == o.roots_ && j_ == o.j_;
        case Kind::GenericRational:
            return fn_ == o.fn_;
    }
    return false;
}

void WordCombination::add(Alg coeff, IntegralWord w)
{
    coeff *= w.prefactor;
    w.prefactor = Alg(1);
    if (coeff.is_zero())
        return;
    for (size_t i = 0; i < terms.size(); ++i)
        if (terms[i].second.same_shape(w)) {
            terms[i].first += coeff;
            if (terms[i].first.is_zero())
                terms.erase(terms.begin() + long(i));
            return;
        }
    terms.emplace_back(std::move(coeff), std::move(w));
}

WordCombination shuffle(const IntegralWord& u, const IntegralWord& v)
{
    if (u.basePoint != v.basePoint)
        throw usage_error("shuffle: base points differ");
    for (const IntegralWord* w : {&u, &v})
        for (const Letter& l : w->letters)
            if (base_half_order(l, w->basePoint) > 2)
                throw usage_error("shuffle: letter " + l.str() +
                                  " has more than a simple pole at the base point");
    WordCombination out;
    std::vector<Letter> cur;
    shuffle_rec(u.letters, 0, v.letters, 0, cur, u.basePoint, u.prefactor * v.prefactor, out);
    return out;
}

IntegralWord transform_word(const IntegralWord& w, const Transformation& t, Field& F)
{
    if (w.basePoint == 1 && t.variant == Variant::General)
        throw usage_error("transform_word: base point 1 needs a unit-interval transformation");
    if (!t.g.num()(Cplx(0)).is_zero())
        throw usage_error("transform_word: transformation does not fix the base point");
    IntegralWord out;
    out.basePoint = w.basePoint;
    out.prefactor = w.prefactor;
    RatFnC gp = t.g.derivative();
    for (const Letter& l : w.letters) {
        RatFnC composed;
        if (l.kind() == Letter::Kind::Rat) {
            RatFnC f(PolyC(Cplx(sign_constant(l.pole(), w.basePoint))), PolyC::linear(l.pole()));
            composed = compose(f, t.g) * gp;
        } else if (l.kind() == Letter::Kind::GenericRational) {
            composed = compose(l.fn(), t.g) * gp;
        } else {
            auto sq = is_square(compose(l.squared(w.basePoint), t.g) * gp * gp);
            if (!sq)
                throw usage_error("transform_word: letter " + l.str() +
                                  " is not rationalized by the transformation");
            Cplx rc = F.sqrt(sq->first);
            RatFnC h = sq->second;
            double u0 = 0.37;
            std::complex<double> lhs =
                l.eval(eval_ratfn(t.g, u0).real(), w.basePoint) * eval_ratfn(gp, u0);
            std::complex<double> rhs = cd(rc) * eval_ratfn(h, u0);
            int s = std::abs(lhs - rhs) <= std::abs(lhs + rhs) ? 1 : -1;
            composed = RatFnC(Cplx(s) * rc) * h;
        }
        auto [scalar, reduced] = extract_scalar(composed);
        out.prefactor *= scalar;
        out.letters.push_back(Letter::generic(std::move(reduced)));
    }
    return out;
}

IntegralWord partial_fraction_letters(const IntegralWord& w)
{
    IntegralWord out = w;
    for (Letter& l : out.letters) {
        if (l.kind() != Letter::Kind::GenericRational)
            continue;
        const RatFnC& f = l.fn();
        PartialFractions pf;
        pf.remainder = f;
        if (f.den().degree() >= 1) {
            RatFnC dp(f.den().derivative());
            for (const auto& [a, mult] : split_linear_factors(f.den())) {
                if (mult != 1)
                    continue;  // higher-order poles stay in the remainder
                Cplx c = f.num()(a) / dp.num()(a);
                if (c.is_zero())
                    continue;
                pf.simple.emplace_back(a, c);
                pf.remainder =
                    pf.remainder - RatFnC(PolyC(c), PolyC::linear(a));
            }
        }
        if (pf.remainder.is_zero() && pf.simple.size() == 1) {
            auto [a, c] = pf.simple.front();
            Cplx s = c * Cplx(sign_constant(a, out.basePoint));
            if (s.is_real()) {
                out.prefactor *= s.re;
                l = Letter::rat(a);
                continue;
            }
        }
        l.decomposition = std::move(pf);
    }
    return out;
}

WordCombination expand_partial_fractions(const IntegralWord& w)
{
    std::vector<std::vector<std::pair<Alg, Letter>>> options;
    for (const Letter& l : w.letters) {
        std::vector<std::pair<Alg, Letter>> opts;
        if (l.kind() == Letter::Kind::GenericRational && l.decomposition) {
            for (const auto& [a, c] : l.decomposition->simple) {
                Cplx s = c * Cplx(sign_constant(a, w.basePoint));
                if (s.is_real())
                    opts.emplace_back(s.re, Letter::rat(a));
                else
                    opts.emplace_back(Alg(1),
                                      Letter::generic(RatFnC(PolyC(c), PolyC::linear(a))));
            }
            if (!l.decomposition->remainder.is_zero())
                opts.emplace_back(Alg(1), Letter::generic(l.decomposition->remainder));
        } else {
            opts.emplace_back(Alg(1), l);
        }
        options.push_back(std::move(opts));
    }
    WordCombination out;
    std::vector<size_t> idx(options.size(), 0);
    while (true) {
        Alg coeff = w.prefactor;
        IntegralWord term;
        term.basePoint = w.basePoint;
        for (size_t i = 0; i < options.size(); ++i) {
            coeff *= options[i][idx[i]].first;
            term.letters.push_back(options[i][idx[i]].second);
        }
        out.add(coeff, std::move(term));
        size_t i = options.size();
        while (i > 0) {
            --i;
            if (++idx[i] < options[i].size())
                break;
            idx[i] = 0;
            if (i == 0)
                return out;
        }
        if (options.empty())
            return out;
    }
}

}  // namespace radix
