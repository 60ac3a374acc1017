#include "radix/quadrature.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace radix {

namespace {

using C = std::complex<double>;

C cd(const Cplx& z) { return {z.re.to_double(), z.im.to_double()}; }

C eval_poly(const std::vector<C>& coeffs, C x)
{
    C v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        v = v * x + *it;
    return v;
}

std::vector<C> to_doubles(const PolyC& p)
{
    std::vector<C> out;
    for (const Cplx& c : p.coeffs())
        out.push_back(cd(c));
    return out;
}

/// Letter prepared for quadrature in base-distance coordinates s, where the
/// base point sits at s = 0 and the letter equals r(s) / s^(p/2) with r
/// smooth at 0.
struct PreparedLetter {
    int p;
    std::function<C(double)> r;
    std::string name;
};

PreparedLetter prepare(const Letter& l, int base)
{
    PreparedLetter out;
    out.p = base_half_order(l, base);
    out.name = l.str();
    Cplx b(base);

    if (l.kind() == Letter::Kind::GenericRational) {
        PolyC num = l.fn().num(), den = l.fn().den();
        int mn = 0, md = 0;
        while (num.degree() >= 1 && num(b).is_zero()) {
            num = num / PolyC::linear(b);
            ++mn;
        }
        while (den.degree() >= 1 && den(b).is_zero()) {
            den = den / PolyC::linear(b);
            ++md;
        }
        double sgn = (base == 1 && (md - mn) % 2 != 0) ? -1.0 : 1.0;
        auto n = to_doubles(num), d = to_doubles(den);
        out.r = [n, d, sgn, base](double s) {
            double tau = base == 0 ? s : 1.0 - s;
            return sgn * eval_poly(n, tau) / eval_poly(d, tau);
        };
        return out;
    }

    std::vector<std::pair<C, double>> sq;  // non-base sqrt factors (root, sign)
    for (const Cplx& a : l.roots())
        if (a != b)
            sq.emplace_back(cd(a), double(sign_constant(a, base)));
    bool has_pole = (l.kind() == Letter::Kind::Rat || l.kind() == Letter::Kind::RatTimesSqrt) &&
                    l.pole() != b;
    C pole = has_pole ? cd(l.pole()) : C(0);
    double pole_sign = has_pole ? double(sign_constant(l.pole(), base)) : 1.0;
    // tau^j cancels against s^(p/2) at base 0; at base 1 it stays
    int jpow = l.kind() == Letter::Kind::PowerTimesSqrt && base == 1 ? l.power() : 0;

    out.r = [sq, has_pole, pole, pole_sign, jpow, base](double s) {
        double tau = base == 0 ? s : 1.0 - s;
        C v = 1;
        for (const auto& [a, c] : sq)
            v *= std::sqrt(c / (tau - a));
        if (has_pole)
            v *= pole_sign / (tau - pole);
        for (int k = 0; k < jpow; ++k)
            v *= tau;
        return v;
    };
    return out;
}

/// Chebyshev interpolation coefficients from values at first-kind points.
std::vector<C> cheb_coeffs(const std::vector<C>& vals)
{
    size_t n = vals.size();
    std::vector<C> c(n);
    for (size_t k = 0; k < n; ++k) {
        C acc = 0;
        for (size_t i = 0; i < n; ++i)
            acc += vals[i] * std::cos(double(k) * (2.0 * double(i) + 1.0) *
                                      std::numbers::pi / (2.0 * double(n)));
        c[k] = acc * (k == 0 ? 1.0 : 2.0) / double(n);
    }
    return c;
}

C clenshaw(const std::vector<C>& c, double s)
{
    C b1 = 0, b2 = 0;
    for (size_t k = c.size(); k-- > 1;) {
        C b0 = 2.0 * s * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return s * b1 - b2 + (c.empty() ? C(0) : c[0]);
}

/// Antiderivative coefficients, scaled for v = (1+s)/2 and pinned to 0 at
/// v = 0 (s = -1).
std::vector<C> antiderivative(const std::vector<C>& c)
{
    size_t n = c.size();
    std::vector<C> A(n + 1, C(0));
    auto get = [&](size_t k) { return k < n ? c[k] : C(0); };
    if (n > 0)
        A[1] = get(0) - get(2) / 2.0;
    for (size_t k = 2; k <= n; ++k)
        A[k] = (get(k - 1) - get(k + 1)) / (2.0 * double(k));
    for (size_t k = 1; k <= n; ++k)
        A[k] *= 0.5;  // dv = ds/2
    C at_base = 0;
    for (size_t k = 1; k <= n; ++k)
        at_base += (k % 2 ? -A[k] : A[k]);
    A[0] = -at_base;
    return A;
}

/// Coefficients of phi(v)/v given those of phi with phi(0) = 0: backward
/// recurrence for deflating the root at s = -1, then the factor 2 from
/// v = (1+s)/2.
std::vector<C> divide_by_v(const std::vector<C>& a)
{
    size_t n = a.size();
    if (n <= 1)
        return {C(0)};
    std::vector<C> b(n - 1, C(0));
    auto getb = [&](size_t k) { return k < n - 1 ? b[k] : C(0); };
    if (n == 2) {
        b[0] = 2.0 * a[1];  // (s+1) b0 T0 puts the full b0 into T1
        return b;
    }
    b[n - 2] = 2.0 * a[n - 1];
    for (size_t j = n - 2; j >= 2; --j)
        b[j - 1] = 2.0 * (a[j] - getb(j) - getb(j + 1) / 2.0);
    if (n - 1 > 1)
        b[0] = a[1] - getb(1) - getb(2) / 2.0;
    for (C& x : b)
        x *= 2.0;
    return b;
}

}  // namespace

double eval_word(const IntegralWord& w, double x, double tol)
{
    if (!(x > 0.0 && x <= 1.0))
        throw domain_error("eval_word: x must lie in (0,1]");
    if (w.letters.empty())
        return w.prefactor.to_double();

    std::vector<PreparedLetter> prep;
    for (const Letter& l : w.letters)
        prep.push_back(prepare(l, w.basePoint));

    // syntactic convergence check, innermost outward: integrand ~ v^(1-p+q)
    int q = 0;
    for (size_t i = prep.size(); i-- > 0;) {
        if (prep[i].p >= q + 2)
            throw divergence_error("eval_word: word diverges at the base point (letter " +
                                   prep[i].name + ")");
        q = 2 - prep[i].p + q;
    }

    double X = w.basePoint == 0 ? x : 1.0 - x;
    if (X == 0.0)
        return 0.0;
    double sX = std::sqrt(X);

    auto run = [&](size_t N) {
        std::vector<double> snodes(N), vnodes(N);
        for (size_t i = 0; i < N; ++i) {
            snodes[i] = std::cos((2.0 * double(i) + 1.0) * std::numbers::pi / (2.0 * double(N)));
            vnodes[i] = (1.0 + snodes[i]) / 2.0;
        }
        std::vector<C> phi = {C(1)};
        for (size_t j = prep.size(); j-- > 0;) {
            const PreparedLetter& pl = prep[j];
            std::vector<C> psi(N);
            if (pl.p == 2) {
                std::vector<C> over_v = divide_by_v(phi);
                for (size_t i = 0; i < N; ++i)
                    psi[i] = 2.0 * pl.r(X * vnodes[i] * vnodes[i]) *
                             clenshaw(over_v, snodes[i]);
            } else {
                double Xpow = 2.0 * std::pow(sX, 2 - pl.p);
                for (size_t i = 0; i < N; ++i)
                    psi[i] = Xpow * std::pow(vnodes[i], 1 - pl.p) *
                             pl.r(X * vnodes[i] * vnodes[i]) * clenshaw(phi, snodes[i]);
            }
            phi = antiderivative(cheb_coeffs(psi));
        }
        C total = 0;
        for (const C& c : phi)
            total += c;  // T_k(1) = 1
        return total;
    };

    double prefac = w.prefactor.to_double();
    C prev = 0;
    bool have_prev = false;
    for (size_t N = 24; N <= 3072; N *= 2) {
        C val = run(N);
        if (have_prev && std::abs(val - prev) <= std::max(tol, tol * std::abs(val)))
            return prefac * val.real();
        prev = val;
        have_prev = true;
    }
    throw accuracy_error("eval_word: tolerance not reached, best estimate " +
                             std::to_string(prefac * prev.real()),
                         prefac * prev.real());
}

}  // namespace radix
