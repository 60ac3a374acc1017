#include "radix/sums.hpp"

#include <sstream>

namespace radix {

namespace {

Rat binom_2n_n(long n)
{
    Int num = 1, den = 1;
    for (long k = 1; k <= n; ++k) {
        num *= Int(n + k);
        den *= Int(k);
    }
    return Rat(num, den);
}

}  // namespace

Prefactor Prefactor::geometric(Alg c)
{
    Prefactor p;
    p.geo = std::move(c);
    return p;
}

Prefactor Prefactor::n_power(int k)
{
    Prefactor p;
    p.npow = k;
    return p;
}

Prefactor Prefactor::binom_power(int k)
{
    Prefactor p;
    p.binpow = k;
    return p;
}

Prefactor Prefactor::inv_odd()
{
    Prefactor p;
    p.odd = 1;
    return p;
}

Prefactor Prefactor::kronecker()
{
    Prefactor p;
    p.delta = true;
    return p;
}

Prefactor Prefactor::constant(Alg c)
{
    Prefactor p;
    p.scale = std::move(c);
    return p;
}

Prefactor operator*(const Prefactor& a, const Prefactor& b)
{
    Prefactor p;
    p.scale = a.scale * b.scale;
    p.geo = a.geo * b.geo;
    p.npow = a.npow + b.npow;
    p.binpow = a.binpow + b.binpow;
    p.odd = a.odd + b.odd;
    p.delta = a.delta || b.delta;
    return p;
}

bool Prefactor::operator==(const Prefactor& o) const
{
    return scale == o.scale && geo == o.geo && npow == o.npow && binpow == o.binpow &&
           odd == o.odd && delta == o.delta;
}

Alg Prefactor::value_at(long n) const
{
    if (n < 1)
        throw domain_error("Prefactor::value_at: index must be >= 1");
    if (delta && n != 1)
        return Alg(0);
    Alg v = scale * geo.pow(n);
    Rat q = rat_pow(Rat(n), npow);
    Rat b = binom_2n_n(n);
    for (int k = 0; k < binpow; ++k)
        q *= b;
    for (int k = 0; k > binpow; --k)
        q /= b;
    for (int k = 0; k < odd; ++k)
        q /= Rat(2 * n + 1);
    for (int k = 0; k > odd; --k)
        q *= Rat(2 * n + 1);
    return v * Alg(q);
}

std::string Prefactor::str() const
{
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first)
            os << "*";
        first = false;
    };
    if (!(scale == Alg(1))) {
        sep();
        os << scale.str();
    }
    if (!(geo == Alg(1))) {
        sep();
        os << "(" << geo.str() << ")^n";
    }
    if (npow != 0) {
        sep();
        os << "n^" << npow;
    }
    if (binpow != 0) {
        sep();
        os << "binom(2n,n)^" << binpow;
    }
    if (odd != 0) {
        sep();
        os << "(2n+1)^-" << odd;
    }
    if (delta) {
        sep();
        os << "delta_{1,n}";
    }
    if (first)
        os << "1";
    return os.str();
}

namespace {

std::vector<Prefactor> tail(const std::vector<Prefactor>& v)
{
    return {v.begin() + 1, v.end()};
}

std::vector<Prefactor> merged_head(const Prefactor& extra, const std::vector<Prefactor>& v)
{
    std::vector<Prefactor> out;
    out.push_back(extra * v[1]);
    out.insert(out.end(), v.begin() + 2, v.end());
    return out;
}

// the binomial rules have no geometric factor on their left-hand sides
bool plain(const Prefactor& p) { return !p.delta && p.odd == 0 && p.geo == Alg(1); }

}  // namespace

std::optional<RuleApplication> apply_rule(Rule r, const SumExpr& s)
{
    if (s.layers.empty())
        throw usage_error("apply_rule: empty sum");
    const Prefactor& h = s.layers.front();
    RuleApplication out;

    switch (r) {
    case Rule::R701:
        // sum x^n f_n / n = int_0^x (1/t) sum t^n f_n dt
        if (h.npow > -1 || h.delta)
            return std::nullopt;
        out.kernel = Kernel::ReciprocalT;
        out.inner = s;
        out.inner.layers[0].npow += 1;
        return out;

    case Rule::R705:
        // sum x^n binom sum_i f_i = 1/(4 sqrt(1/4-x)) int K (sum t^n n binom f_n) dt
        if (!(plain(h) && h.npow == 0 && h.binpow == 1 && s.layers.size() >= 2))
            return std::nullopt;
        out.mult = Multiplier::InvFourSqrtQuarter;
        out.kernel = Kernel::ReciprocalTQuarter;
        out.inner.layers = merged_head(Prefactor::constant(h.scale) * Prefactor::n_power(1) *
                                           Prefactor::binom_power(1),
                                       s.layers);
        return out;

    case Rule::R706:
        // index-shifted form, applied when the summand is delta-terminated:
        // sum_{n>=0} t^n/binom f_{n+1} collapses to the constant f_1
        if (!(plain(h) && h.npow == -1 && h.binpow == -1 && s.layers.size() == 2 &&
              s.layers[1].delta))
            return std::nullopt;
        out.mult = Multiplier::SqrtRatio4;
        out.kernel = Kernel::SqrtT4;
        out.collapsed = true;
        {
            Prefactor inner_val = s.layers[1];
            inner_val.delta = false;
            out.constant = h.scale * inner_val.value_at(1);
        }
        return out;

    case Rule::R707:
        // sum x^n/(n binom) sum_i f_i = sum x^n/(n binom) f_n
        //   + sqrt(x)/sqrt(4-x) int K (sum t^n/binom f_n) dt
        if (!(plain(h) && h.npow == -1 && h.binpow == -1 && s.layers.size() >= 2))
            return std::nullopt;
        out.mult = Multiplier::SqrtRatio4;
        out.kernel = Kernel::SqrtT4;
        out.direct = SumExpr{merged_head(h, s.layers)};
        {
            Prefactor hb = h;
            hb.npow = 0;
            out.inner.layers = merged_head(hb, s.layers);
        }
        return out;

    case Rule::R708:
        // sum x^n/((2n+1) binom) sum_i f_i = 2/(sqrt(x) sqrt(4-x)) int K (sum t^n/binom f_n) dt
        if (!(!h.delta && h.odd == 1 && h.npow == 0 && h.binpow == -1 && s.layers.size() >= 2))
            return std::nullopt;
        out.mult = Multiplier::TwoOverSqrt4;
        out.kernel = Kernel::SqrtT4;
        {
            Prefactor hb = h;
            hb.odd = 0;
            out.inner.layers = merged_head(hb, s.layers);
        }
        return out;
    }
    return std::nullopt;
}

const std::vector<RuleSlot>& rule_registry()
{
    static const std::vector<RuleSlot> slots = {
        {"R701", true},  {"R702", false}, {"R703", false}, {"R704", false},
        {"R705", true},  {"R706", true},  {"R707", true},  {"R708", true},
        {"R709", false}, {"R710", false}, {"R711", false},
    };
    return slots;
}

namespace {

/// kernel(t) * multiplier(t) written as a sum of single letters.
std::vector<std::pair<Alg, Letter>> combine(Kernel k, Multiplier m)
{
    Cplx zero(Alg(0)), four(Alg(4));
    Cplx quarter{Alg(Rat(1, 4))};
    switch (k) {
    case Kernel::ReciprocalT:
        switch (m) {
        case Multiplier::One:
            return {{Alg(1), Letter::rat(zero)}};
        case Multiplier::SqrtRatio4:
            // sqrt(t)/(t sqrt(4-t)) = 1/(sqrt(t) sqrt(4-t))
            return {{Alg(1), Letter::sqrt_set({zero, four})}};
        case Multiplier::InvFourSqrtQuarter:
            return {{Alg(Rat(1, 4)), Letter::rat_times_sqrt(zero, {quarter})}};
        case Multiplier::TwoOverSqrt4:
            break;
        }
        break;
    case Kernel::ReciprocalTQuarter:
        switch (m) {
        case Multiplier::One:
            return {{Alg(1), Letter::rat_times_sqrt(zero, {quarter})}};
        case Multiplier::SqrtRatio4:
            // sqrt(t)/(t sqrt(4-t) sqrt(1/4-t)) = 1/(sqrt t sqrt(4-t) sqrt(1/4-t))
            return {{Alg(1), Letter::sqrt_set({zero, four, quarter})}};
        case Multiplier::InvFourSqrtQuarter:
            // 1/(4 t (1/4-t)) = 1/t + 1/(1/4-t)
            return {{Alg(1), Letter::rat(zero)}, {Alg(1), Letter::rat(quarter)}};
        case Multiplier::TwoOverSqrt4:
            break;
        }
        break;
    case Kernel::SqrtT4:
        switch (m) {
        case Multiplier::One:
            return {{Alg(1), Letter::sqrt_set({zero, four})}};
        case Multiplier::SqrtRatio4:
            // sqrt(t)/(sqrt(t) (4-t)) = 1/(4-t)
            return {{Alg(1), Letter::rat(four)}};
        case Multiplier::InvFourSqrtQuarter:
            return {{Alg(Rat(1, 4)), Letter::sqrt_set({zero, four, quarter})}};
        case Multiplier::TwoOverSqrt4:
            // 2/(t (4-t)) = (1/2)(1/t + 1/(4-t))
            return {{Alg(Rat(1, 2)), Letter::rat(zero)}, {Alg(Rat(1, 2)), Letter::rat(four)}};
        }
        break;
    }
    throw unsupported_sum_error("kernel/multiplier product is not a letter");
}

/// Integrate each inner term against the kernel: the kernel absorbs the
/// term's multiplier and becomes the new outermost letter.
std::vector<GFTerm> integrate(Kernel k, const std::vector<GFTerm>& inner)
{
    std::vector<GFTerm> out;
    for (const GFTerm& t : inner)
        for (const auto& [c, l] : combine(k, t.mult)) {
            GFTerm nt;
            nt.coeff = t.coeff * c;
            nt.word.basePoint = 0;
            nt.word.letters.push_back(l);
            nt.word.letters.insert(nt.word.letters.end(), t.word.letters.begin(),
                                   t.word.letters.end());
            out.push_back(nt);
        }
    return out;
}

std::vector<GFTerm> with_mult(std::vector<GFTerm> terms, Multiplier m)
{
    for (GFTerm& t : terms) {
        if (t.mult != Multiplier::One)
            throw unsupported_sum_error("stacked integral multipliers");
        t.mult = m;
    }
    return terms;
}

/// Word whose value is x: a single constant-1 letter.
IntegralWord x_word()
{
    IntegralWord w;
    w.basePoint = 0;
    w.letters.push_back(Letter::generic(RatFnC(Cplx(Alg(1)))));
    return w;
}

std::vector<GFTerm> rewrite(const SumExpr& s, int depth)
{
    if (depth > 64)
        throw unsupported_sum_error("rewrite recursion limit exceeded");
    const auto& L = s.layers;
    if (L.empty())
        throw usage_error("to_generating_function: empty sum");
    const Prefactor& h = L.front();

    if (h.delta) {
        // only n = 1 survives; every inner sum runs over the single index 1
        Alg v(1);
        for (const Prefactor& p : L) {
            Prefactor q = p;
            q.delta = false;
            v = v * q.value_at(1);
        }
        if (v.is_zero())
            return {};
        GFTerm t;
        t.coeff = v;
        t.word = x_word();
        return {t};
    }

    // how far 1/n factors must be split off before a binomial rule matches
    int target = h.binpow == -1 && h.odd == 0 ? -1 : 0;
    if (h.npow < target) {
        auto app = apply_rule(Rule::R701, s);
        return integrate(app->kernel, rewrite(app->inner, depth + 1));
    }

    if (L.size() == 1) {
        if (h.npow == 0 && h.binpow == 0 && h.odd == 0) {
            // geometric tail: sum_{n>=1} (c x)^n = int_0^x c/(1-c t)^2 dt
            Cplx c(h.geo);
            PolyC den = PolyC(std::vector<Cplx>{-Cplx(Alg(1)), c}).pow(2);  // (c t - 1)^2
            GFTerm t;
            t.coeff = h.scale;
            t.word.basePoint = 0;
            t.word.letters.push_back(Letter::generic(RatFnC(PolyC{c}, den)));
            return {t};
        }
        if (h.npow == -1 && h.binpow == -1 && h.odd == 0) {
            // sum f_n = sum sum_{i<=n} delta_{1,i} f_n opens the door to R706
            SumExpr wrapped = s;
            wrapped.layers.push_back(Prefactor::kronecker());
            return rewrite(wrapped, depth + 1);
        }
        throw unsupported_sum_error("no closed form for terminal prefactor " + h.str());
    }

    for (Rule r : {Rule::R705, Rule::R706, Rule::R708, Rule::R707}) {
        auto app = apply_rule(r, s);
        if (!app)
            continue;
        std::vector<GFTerm> out;
        if (app->collapsed) {
            if (app->constant.is_zero())
                return {};
            GFTerm t;
            t.coeff = app->constant;
            t.mult = app->mult;
            t.word.basePoint = 0;
            t.word.letters.push_back(combine(app->kernel, Multiplier::One)[0].second);
            out.push_back(t);
        } else {
            if (app->direct)
                out = rewrite(*app->direct, depth + 1);
            auto integral =
                with_mult(integrate(app->kernel, rewrite(app->inner, depth + 1)), app->mult);
            out.insert(out.end(), integral.begin(), integral.end());
        }
        return out;
    }
    throw unsupported_sum_error("no rewrite rule applies to prefactor " + h.str());
}

}  // namespace

WordCombination to_generating_function(const SumExpr& s)
{
    WordCombination out;
    for (const GFTerm& t : rewrite(s, 0)) {
        if (t.mult != Multiplier::One)
            throw unsupported_sum_error(
                "generating function keeps an algebraic multiplier; not a word combination");
        out.add(t.coeff, t.word);
    }
    return out;
}

std::string MellinTag::str() const
{
    std::ostringstream os;
    for (const Cplx& sh : shifts)
        os << "x/(x-(" << sh.str() << "))*";
    os << base;
    if (regularization_needed)
        os << " [regularized]";
    return os.str();
}

MellinRep mellin_sum_rule(const Alg& c, const MellinTag& f)
{
    if (c.is_zero())
        throw domain_error("mellin_sum_rule: vanishing geometric base");
    MellinTag g = f;
    g.shifts.push_back(Cplx(c.inv()));
    if (c == Alg(1))
        g.regularization_needed = true;
    MellinRep out;
    out.constants.push_back({Alg(-1), g});
    out.terms.push_back({c, g});
    return out;
}

}  // namespace radix
