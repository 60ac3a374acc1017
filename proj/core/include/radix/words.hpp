#pragma once

#include <complex>
#include <optional>

#include "radix/catalog.hpp"

namespace radix {

struct divergence_error : domain_error {
    using domain_error::domain_error;
};

struct accuracy_error : std::runtime_error {
    accuracy_error(const std::string& what, double est) : std::runtime_error(what), achieved(est)
    {
    }
    double achieved;
};

/// Sign constant making the integrand positive approaching the base point:
/// sgn(-a+0) at base 0, sgn(1-a-0) at base 1. Non-real poles get +1.
int sign_constant(const Cplx& a, int basePoint);

class Letter;

/// Growth exponent at the base point: the letter behaves like t^(-p/2) in the
/// distance t to the base. p = 2 is a simple pole; negative p is a zero.
int base_half_order(const Letter& l, int basePoint);

/// Exact decomposition of a rational letter: sum of c/(x-a) over the listed
/// poles plus a remainder with no linear factor found over the tower.
struct PartialFractions {
    std::vector<std::pair<Cplx, Cplx>> simple;  // (pole, coefficient)
    RatFnC remainder;
};

/// One integrand of a nested integral: a reciprocal linear factor, a product
/// of square roots of reciprocal linear factors, mixed forms, or a free
/// rational function.
class Letter {
public:
    enum class Kind { Rat, SqrtSet, RatTimesSqrt, PowerTimesSqrt, GenericRational };

    static Letter rat(Cplx a);
    static Letter sqrt_set(std::vector<Cplx> roots);
    static Letter rat_times_sqrt(Cplx a, std::vector<Cplx> roots);
    static Letter power_times_sqrt(std::vector<Cplx> roots, int power);
    static Letter generic(RatFnC f);

    Kind kind() const { return kind_; }
    const Cplx& pole() const { return a_; }
    const std::vector<Cplx>& roots() const { return roots_; }
    int power() const { return j_; }
    const RatFnC& fn() const { return fn_; }

    /// Square of the letter as a rational function (sign constants taken for
    /// the given base point).
    RatFnC squared(int basePoint) const;
    /// Numeric value with principal square roots per factor.
    std::complex<double> eval(double t, int basePoint) const;

    std::string str() const;
    bool operator==(const Letter& o) const;
    bool operator!=(const Letter& o) const { return !(*this == o); }

    /// Attached by partial_fraction_letters on GenericRational letters.
    std::optional<PartialFractions> decomposition;

private:
    Kind kind_ = Kind::Rat;
    Cplx a_;
    std::vector<Cplx> roots_;
    int j_ = 0;
    RatFnC fn_;
};

/// Nested integral as a word over letters, outermost first. Base point 0
/// integrates 0 -> x at every level, base point 1 integrates x -> 1. The
/// empty word is the constant 1.
struct IntegralWord {
    std::vector<Letter> letters;
    int basePoint = 0;
    Alg prefactor = Alg(1);

    bool same_shape(const IntegralWord& o) const
    {
        return basePoint == o.basePoint && letters == o.letters;
    }
};

/// Formal linear combination of words; like terms merged, word prefactors
/// folded into the coefficients.
struct WordCombination {
    std::vector<std::pair<Alg, IntegralWord>> terms;

    void add(Alg coeff, IntegralWord w);
};

/// Sum over all order-preserving interleavings; term count is
/// binom(|u|+|v|, |u|). Requires matching base points and letters with at
/// most simple poles at the base point.
WordCombination shuffle(const IntegralWord& u, const IntegralWord& v);

/// Change of variable x = g(y) applied uniformly to all levels: each letter f
/// becomes the rational letter f(g(u)) g'(u) with square roots eliminated via
/// the transformation's images; scalar factors move into the prefactor.
IntegralWord transform_word(const IntegralWord& w, const Transformation& t, Field& F);

/// Decompose each rational letter into simple poles over the tower plus an
/// irreducible remainder, attached as metadata; letters that reduce to a
/// single reciprocal linear factor become Rat letters.
IntegralWord partial_fraction_letters(const IntegralWord& w);

/// Multi-linear expansion of the attached decompositions into a combination
/// of words over single-term letters.
WordCombination expand_partial_fractions(const IntegralWord& w);

}  // namespace radix
