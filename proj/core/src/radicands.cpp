#include "radix/radicands.hpp"

#include <algorithm>
#include <cstdint>

#include "radix/sturm.hpp"

namespace radix {

const char* case_tag_name(CaseTag t)
{
    switch (t) {
        case CaseTag::Empty: return "Empty";
        case CaseTag::OneLinear: return "OneLinear";
        case CaseTag::OneQuadratic: return "OneQuadratic";
        case CaseTag::TwoLinear: return "TwoLinear";
        case CaseTag::ThreeQuadratic: return "ThreeQuadratic";
        case CaseTag::NoTransformation: return "NoTransformation";
    }
    return "?";
}

namespace {

struct Book {
    uint64_t factors = 0;  // bits over the working reduced list
    RatFnC cofactor;
    Cplx constant;
};

/* Exact divisibility check for monic divisors. */
bool divides(const PolyC& d, const PolyC& p)
{
    if (d.degree() > p.degree())
        return false;
    return (p % d).is_zero();
}

}  // namespace

RadicandSet normalize(const std::vector<RatFnC>& originals)
{
    RadicandSet R;
    R.originals = originals;

    std::vector<PolyC> work;
    std::vector<Book> books;
    books.reserve(originals.size());

    for (const RatFnC& f : originals) {
        if (f.is_zero())
            throw domain_error("normalize: zero radicand");
        /* f = n/d = n*d / d^2; split n*d into constant * odd * square^2. */
        auto sf = squarefree_part(f.num() * f.den());
        Book b;
        b.constant = sf.constant;
        b.cofactor = RatFnC(sf.square, f.den());
        if (sf.odd.degree() > 0) {
            auto it = std::find(work.begin(), work.end(), sf.odd);
            size_t idx;
            if (it == work.end()) {
                idx = work.size();
                work.push_back(sf.odd);
            } else {
                idx = size_t(it - work.begin());
            }
            b.factors = uint64_t(1) << idx;
        }
        books.push_back(std::move(b));
    }
    if (work.size() > 60)
        throw domain_error("normalize: too many distinct radicands");

    /* Divisibility reduction to fixpoint: whenever f_i | f_j (i != j),
       replace f_j by the quotient; witnesses keep the exact identity
       original = constant * cofactor^2 * prod factors. */
    auto toggle_bit = [&](Book& b, size_t i) {
        uint64_t bit = uint64_t(1) << i;
        if (b.factors & bit) {
            b.factors &= ~bit;
            b.cofactor = b.cofactor * RatFnC(work[i]);
        } else {
            b.factors |= bit;
        }
    };
    auto drop_element = [&](size_t j) {
        work.erase(work.begin() + long(j));
        uint64_t low = (uint64_t(1) << j) - 1;
        for (Book& b : books) {
            uint64_t high = b.factors >> (j + 1);
            b.factors = (b.factors & low) | (high << j);
        }
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < work.size() && !changed; ++i)
            for (size_t j = 0; j < work.size() && !changed; ++j) {
                if (i == j)
                    continue;
                if (!divides(work[i], work[j]))
                    continue;
                PolyC q = (work[j] / work[i]).monic();
                uint64_t bj = uint64_t(1) << j;
                if (q.degree() == 0) {
                    /* equal elements: bit j becomes bit i, drop j */
                    for (Book& b : books)
                        if (b.factors & bj) {
                            b.factors &= ~bj;
                            toggle_bit(b, i);
                        }
                    drop_element(j);
                } else {
                    work[j] = q;
                    for (Book& b : books)
                        if (b.factors & bj)
                            toggle_bit(b, i);
                }
                changed = true;
            }
    }

    R.reduced = work;
    for (const Book& b : books) {
        RadicandSet::Witness w;
        w.constant = b.constant;
        w.cofactor = b.cofactor;
        for (size_t i = 0; i < work.size(); ++i)
            if (b.factors & (uint64_t(1) << i))
                w.factors.push_back(i);
        R.witnesses.push_back(std::move(w));
    }
    return R;
}

namespace {

/* Pairwise-coprime monic squarefree basis such that every reduced element is
   a product of basis elements. */
std::vector<PolyC> gcd_free_basis(const std::vector<PolyC>& elems)
{
    std::vector<PolyC> B;
    for (const PolyC& p0 : elems) {
        PolyC q = p0;
        for (size_t i = 0; i < B.size() && q.degree() > 0; ++i) {
            PolyC g = gcd(q, B[i]);
            if (g.degree() == 0)
                continue;
            if (g != B[i]) {
                PolyC rest = (B[i] / g).monic();
                B[i] = g;
                B.push_back(rest);
            }
            q = (q / g).monic();
        }
        if (q.degree() > 0)
            B.push_back(q);
    }
    return B;
}

uint64_t factor_mask(const PolyC& p, const std::vector<PolyC>& B)
{
    uint64_t m = 0;
    for (size_t i = 0; i < B.size(); ++i)
        if (divides(B[i], p))
            m |= uint64_t(1) << i;
    return m;
}

int mask_degree(uint64_t m, const std::vector<PolyC>& B)
{
    int d = 0;
    for (size_t i = 0; i < B.size(); ++i)
        if (m & (uint64_t(1) << i))
            d += B[i].degree();
    return d;
}

PolyC mask_product(uint64_t m, const std::vector<PolyC>& B)
{
    PolyC p{Cplx(1)};
    for (size_t i = 0; i < B.size(); ++i)
        if (m & (uint64_t(1) << i))
            p = p * B[i];
    return p;
}

bool root_is_zero(const Cplx& a) { return a.is_zero(); }

/* Canonical order: real roots ascending before non-real pairs (positive
   imaginary part first), any zero root last. */
void sort_roots(std::vector<Cplx>& roots)
{
    std::sort(roots.begin(), roots.end(), [](const Cplx& a, const Cplx& b) {
        bool za = root_is_zero(a), zb = root_is_zero(b);
        if (za != zb)
            return zb;
        bool ra = a.is_real(), rb = b.is_real();
        if (ra != rb)
            return ra;
        int s = (a.re - b.re).sign();
        if (s != 0)
            return s < 0;
        return (b.im - a.im).sign() < 0;  // positive imaginary part first
    });
}

Cplx linear_root(const PolyC& p)
{
    /* monic x + b */
    return -p.coeff(0);
}

}  // namespace

RadicandCase classify(const RadicandSet& R)
{
    RadicandCase out;
    if (R.reduced.empty()) {
        out.tag = CaseTag::Empty;
        return out;
    }

    std::vector<PolyC> B = gcd_free_basis(R.reduced);
    if (B.size() > 60)
        throw domain_error("classify: too many irreducible factors");

    /* Row-reduce the factor vectors over F2 (highest-bit xor basis). */
    std::vector<uint64_t> by_bit(B.size(), 0);
    for (const PolyC& p : R.reduced) {
        uint64_t v = factor_mask(p, B);
        for (size_t b = B.size(); b-- > 0 && v;) {
            if (!(v >> b & 1))
                continue;
            if (by_bit[b])
                v ^= by_bit[b];
            else {
                by_bit[b] = v;
                v = 0;
            }
        }
    }
    std::vector<uint64_t> rows;
    for (uint64_t r : by_bit)
        if (r)
            rows.push_back(r);
    size_t rank = rows.size();

    /* Genus obstruction: any span element that is squarefree of degree >= 3
       rules out a rational transformation. */
    for (uint64_t combo = 1; combo < (uint64_t(1) << rank); ++combo) {
        uint64_t m = 0;
        for (size_t i = 0; i < rank; ++i)
            if (combo & (uint64_t(1) << i))
                m ^= rows[i];
        if (mask_degree(m, B) >= 3) {
            out.tag = CaseTag::NoTransformation;
            out.witness = mask_product(m, B);
            return out;
        }
    }

    if (rank == 0) {
        out.tag = CaseTag::Empty;
        return out;
    }
    if (rank == 1) {
        PolyC p = mask_product(rows[0], B);
        if (p.degree() == 1) {
            out.tag = CaseTag::OneLinear;
            out.roots = {linear_root(p)};
        } else {
            out.tag = CaseTag::OneQuadratic;
            out.c0 = p.coeff(0);
            out.c1 = p.coeff(1);
        }
        return out;
    }
    if (rank == 2) {
        uint64_t masks[3] = {rows[0], rows[1], rows[0] ^ rows[1]};
        PolyC p[3];
        int nlin = 0;
        for (int i = 0; i < 3; ++i) {
            p[i] = mask_product(masks[i], B);
            if (p[i].degree() == 1)
                ++nlin;
        }
        if (nlin > 0) {
            out.tag = CaseTag::TwoLinear;
            for (int i = 0; i < 3; ++i)
                if (p[i].degree() == 1)
                    out.roots.push_back(linear_root(p[i]));
            sort_roots(out.roots);
            return out;
        }
        out.tag = CaseTag::ThreeQuadratic;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                PolyC g = gcd(p[i], p[j]);
                if (g.degree() != 1)
                    throw domain_error("classify: expected a shared root");
                out.roots.push_back(linear_root(g));
            }
        sort_roots(out.roots);
        return out;
    }
    /* rank >= 3 always contains a squarefree span element of degree >= 3 */
    throw domain_error("classify: unreachable rank without obstruction");
}

namespace {

/* Sign of a real-valued rational function on (0,1) minus its isolated zeros;
   only meaningful when the sign is constant there. */
int interior_sign(const RatFnR& f)
{
    static const Rat samples[] = {Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1, 5),
                                  Rat(2, 5), Rat(3, 5), Rat(1, 7), Rat(3, 7)};
    for (const Rat& q : samples) {
        Alg x{q};
        if (f.den()(x).is_zero())
            continue;
        int s = f(x).sign();
        if (s != 0)
            return s;
    }
    /* more zeros than samples: walk a refining sequence */
    for (long k = 11;; k += 2) {
        Alg x{Rat(1, k)};
        if (f.den()(x).is_zero())
            continue;
        int s = f(x).sign();
        if (s != 0)
            return s;
    }
}

bool is_real_fn(const RatFnC& f)
{
    for (const Cplx& c : f.num().coeffs())
        if (!c.is_real())
            return false;
    for (const Cplx& c : f.den().coeffs())
        if (!c.is_real())
            return false;
    return true;
}

/* Distinct real roots of a squarefree real polynomial inside the open unit
   interval. */
int roots_inside_unit_interval(const PolyR& p0)
{
    PolyR p = p0;
    PolyR x = PolyR::variable();
    PolyR x1 = PolyR::linear(Alg(1));
    if (p(Alg(0)).is_zero())
        p = p / x;
    if (!p.is_constant() && p(Alg(1)).is_zero())
        p = p / x1;
    if (p.is_constant())
        return 0;
    return sturm_root_count(p, Alg(0), Alg(1));
}

void check_real(const RadicandCase& c, const RadicandSet& R, VariantEligibility& e)
{
    for (const RatFnC& f : R.originals)
        if (!is_real_fn(f)) {
            e.real_detail = "radicand has non-real coefficients";
            return;
        }
    for (const PolyC& p : R.reduced)
        if (roots_inside_unit_interval(to_real(p)) > 0) {
            e.real_detail = "radicand " + p.str() + " has a root inside (0,1)";
            return;
        }
    for (const RatFnC& f : R.originals)
        if (interior_sign(to_real(f)) < 0) {
            e.real_detail = "radicand " + f.str() + " is negative on (0,1)";
            return;
        }
    if (c.tag == CaseTag::OneQuadratic && !c.c0.is_zero()) {
        /* x^2 + c1 x + c0 with c0 != 0: nonnegativity of c0^-1(x^2+c1x+c0)
           on [0,1] in closed form */
        Alg c0 = c.c0.re, c1 = c.c1.re;
        Alg one(1), two(2), four(4);
        if ((c0 * (c0 + c1 + one)).sign() < 0) {
            e.real_detail = "quadratic condition c0(c0+c1+1) >= 0 fails";
            return;
        }
        Alg t = two * c0 + c1;
        bool vertex_inside = (-one < t) && (t < Alg(0));
        bool real_roots = (c1 * c1 - four * c0).sign() > 0;
        if (vertex_inside && real_roots) {
            e.real_detail = "quadratic has real roots with -1 < 2c0+c1 < 0";
            return;
        }
        e.real_ok = true;
        e.real_detail = "c0 != 0, c1^2 != 4c0, c0(c0+c1+1) >= 0 hold; "
                        "not both -1 < 2c0+c1 < 0 and c1^2 > 4c0";
        return;
    }
    e.real_ok = true;
    e.real_detail = "roots outside (0,1); radicands nonnegative on [0,1]";
}

void check_complex(const RadicandCase&, const RadicandSet& R, VariantEligibility& e)
{
    std::vector<RatFnC> closed = R.originals;
    for (const RatFnC& f : R.originals)
        closed.push_back(conj(f));
    RadicandCase cc = classify(normalize(closed));

    switch (cc.tag) {
        case CaseTag::NoTransformation:
            e.complex_detail = "conjugate closure admits no transformation";
            return;
        case CaseTag::Empty:
        case CaseTag::OneLinear:
            e.complex_detail = "conjugate closure is real-valued; use the real variant";
            return;
        case CaseTag::OneQuadratic: {
            Cplx disc = cc.c1 * cc.c1 - Cplx(4) * cc.c0;
            if (disc.is_real() && disc.re.sign() >= 0) {
                e.complex_detail = "conjugate closure is real-valued; use the real variant";
                return;
            }
            Field F;
            F.absorb(disc.re.tower());
            F.absorb(disc.im.tower());
            Cplx sd = F.sqrt(disc);
            Cplx half = Cplx(Rat(1, 2));
            std::vector<Cplx> roots{(-cc.c1 + sd) * half, (-cc.c1 - sd) * half};
            sort_roots(roots);
            e.complex_config = ComplexConfig::TwoLinearConj;
            e.complex_roots = roots;
            e.complex_ok = true;
            e.complex_detail = "one square root with conjugate singularities a, conj(a)";
            return;
        }
        case CaseTag::TwoLinear: {
            if (cc.roots[0].is_real() && cc.roots[1].is_real()) {
                e.complex_detail = "conjugate closure is real-valued; use the real variant";
                return;
            }
            e.complex_config = ComplexConfig::TwoLinearConj;
            e.complex_roots = cc.roots;
            e.complex_ok = true;
            e.complex_detail = "linear radicands at conjugate points a, conj(a)";
            return;
        }
        case CaseTag::ThreeQuadratic: {
            std::vector<Cplx> pair, real;
            for (const Cplx& a : cc.roots)
                (a.is_real() ? real : pair).push_back(a);
            if (pair.empty()) {
                e.complex_detail = "conjugate closure is real-valued; use the real variant";
                return;
            }
            if (pair.size() != 2 || pair[1] != pair[0].conj())
                throw domain_error("check_complex: conjugate closure not self-conjugate");
            const Cplx& r = real[0];
            if (r.is_zero()) {
                e.complex_config = ComplexConfig::ThreeQuadraticConjZero;
                e.complex_roots = {pair[0], pair[1], r};
                e.complex_ok = true;
                e.complex_detail = "roots a, conj(a), 0";
                return;
            }
            if (!(r.re.sign() < 0 || r.re >= Alg(1))) {
                e.complex_detail = "real root of conjugate closure lies inside (0,1)";
                return;
            }
            e.complex_config = ComplexConfig::ThreeQuadraticConjReal;
            e.complex_roots = {r, pair[0], pair[1]};
            e.complex_ok = true;
            e.complex_detail = "roots a1 real outside (0,1), a2, conj(a2)";
            return;
        }
        default:
            return;
    }
}

}  // namespace

VariantEligibility check_unit_interval_admissibility(const RadicandCase& c, const RadicandSet& R)
{
    VariantEligibility e;
    if (c.tag == CaseTag::NoTransformation) {
        e.real_detail = e.complex_detail = "no rationalizing transformation exists";
        return e;
    }
    check_real(c, R, e);
    check_complex(c, R, e);
    return e;
}

RadicandCase analyze(const std::vector<RatFnC>& originals, RadicandSet* out_set)
{
    RadicandSet R = normalize(originals);
    RadicandCase c = classify(R);
    c.eligibility = check_unit_interval_admissibility(c, R);
    if (out_set)
        *out_set = std::move(R);
    return c;
}

}  // namespace radix
