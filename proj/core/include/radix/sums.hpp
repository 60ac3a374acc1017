#pragma once

#include "radix/words.hpp"

namespace radix {

struct unsupported_sum_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical factored prefactor of one summation layer:
/// scale * geo^n * n^npow * binom(2n,n)^binpow * (2n+1)^-odd * [delta_{1,n}].
struct Prefactor {
    Alg scale = Alg(1);
    Alg geo = Alg(1);
    int npow = 0;
    int binpow = 0;
    int odd = 0;
    bool delta = false;

    static Prefactor geometric(Alg c);
    static Prefactor n_power(int k);
    static Prefactor binom_power(int k);
    static Prefactor inv_odd();
    static Prefactor kronecker();
    static Prefactor constant(Alg c);

    friend Prefactor operator*(const Prefactor& a, const Prefactor& b);
    bool operator==(const Prefactor& o) const;

    /// Exact value at a concrete index n >= 1.
    Alg value_at(long n) const;
    std::string str() const;
};

/// Nested sum sum_{n>=1} x^n pre[0](n) sum_{i1<=n} pre[1](i1) ... with one
/// prefactor per layer, outermost first.
struct SumExpr {
    std::vector<Prefactor> layers;
};

enum class Rule { R701, R705, R706, R707, R708 };

/// Kernels of the integral operators emitted by the rules.
enum class Kernel {
    ReciprocalT,        // 1/t
    ReciprocalTQuarter, // 1/(t sqrt(1/4 - t))
    SqrtT4              // 1/(sqrt(t) sqrt(4 - t))
};

/// Algebraic multipliers in front of the emitted integrals.
enum class Multiplier {
    One,
    InvFourSqrtQuarter, // 1/(4 sqrt(1/4 - x))
    SqrtRatio4,         // sqrt(x)/sqrt(4 - x)
    TwoOverSqrt4        // 2/(sqrt(x) sqrt(4 - x))
};

/// Result of one rule application: multiplier * integral_0^x kernel * (inner
/// generating function) dt, an optional non-integral term (R707), or a
/// collapsed constant integrand (R706 on a Kronecker-delta summand).
struct RuleApplication {
    Multiplier mult = Multiplier::One;
    Kernel kernel = Kernel::ReciprocalT;
    SumExpr inner;
    std::optional<SumExpr> direct;
    bool collapsed = false;
    Alg constant = Alg(0);
};

/// Try one rewrite rule on the sum; nullopt when the outer prefactor does not
/// match the rule's left-hand side.
std::optional<RuleApplication> apply_rule(Rule r, const SumExpr& s);

/// Registry of rewrite-rule slots; unimplemented entries are declared rather
/// than guessed, so callers can report precise coverage.
struct RuleSlot {
    std::string name;
    bool implemented;
};
const std::vector<RuleSlot>& rule_registry();

/// One term of a partially flattened generating function.
struct GFTerm {
    Alg coeff = Alg(1);
    Multiplier mult = Multiplier::One;
    IntegralWord word;
};

/// Rewrite the sum's generating function into nested-integral words over the
/// base point 0; throws unsupported_sum_error when the prefactor alphabet
/// cannot be closed by the rule set.
WordCombination to_generating_function(const SumExpr& s);

/// Opaque Mellin integrand: a user tag with stacked rational kernel factors
/// x/(x - s) attached by the sum rule.
struct MellinTag {
    std::string base;
    std::vector<Cplx> shifts;
    bool regularization_needed = false;

    std::string str() const;
    bool operator==(const MellinTag& o) const
    {
        return base == o.base && shifts == o.shifts;
    }
};

/// Mellin representation c0 + sum of plain constants coeff*M[tag](0) plus
/// terms c^n * M[tag](n); everything independent of n.
struct MellinRep {
    Alg c0 = Alg(0);
    struct Const {
        Alg coeff;
        MellinTag tag;
    };
    std::vector<Const> constants;
    struct Term {
        Alg c;
        MellinTag f;
    };
    std::vector<Term> terms;
};

/// Structural rewrite of sum_{i<=n} c^i M[f](i) into
/// c^n M[x/(x-1/c) f](n) - M[x/(x-1/c) f](0); c = 1 marks the result as
/// needing regularization.
MellinRep mellin_sum_rule(const Alg& c, const MellinTag& f);

}  // namespace radix
