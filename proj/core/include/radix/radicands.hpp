#pragma once

#include <string>

#include "radix/rational_function.hpp"

namespace radix {

/// Normalized radicand set per the square/divisibility reduction: monic
/// squarefree non-constant polynomials, none dividing another, with an exact
/// witness original = constant * cofactor^2 * prod of reduced elements.
struct RadicandSet {
    struct Witness {
        Cplx constant;
        RatFnC cofactor;
        std::vector<size_t> factors;  // indices into reduced
    };

    std::vector<RatFnC> originals;
    std::vector<PolyC> reduced;
    std::vector<Witness> witnesses;  // parallel to originals

    RatFnC reconstruct(size_t i) const
    {
        const Witness& w = witnesses[i];
        RatFnC v = RatFnC(PolyC(w.constant)) * w.cofactor * w.cofactor;
        for (size_t f : w.factors)
            v = v * RatFnC(reduced[f]);
        return v;
    }
};

enum class CaseTag { Empty, OneLinear, OneQuadratic, TwoLinear, ThreeQuadratic, NoTransformation };

enum class ComplexConfig { None, TwoLinearConj, ThreeQuadraticConjZero, ThreeQuadraticConjReal };

struct VariantEligibility {
    bool real_ok = false;
    std::string real_detail;
    bool complex_ok = false;
    std::string complex_detail;
    ComplexConfig complex_config = ComplexConfig::None;
    std::vector<Cplx> complex_roots;
};

struct RadicandCase {
    CaseTag tag = CaseTag::Empty;
    std::vector<Cplx> roots;  // OneLinear: {a}; TwoLinear: {a1,a2}; ThreeQuadratic: {a1,a2,a3}
    Cplx c0, c1;              // OneQuadratic: x^2 + c1 x + c0
    PolyC witness;            // NoTransformation: squarefree of degree >= 3
    VariantEligibility eligibility;

    bool admits_transformation() const
    {
        return tag != CaseTag::NoTransformation;
    }
};

const char* case_tag_name(CaseTag t);

/// Remark-2 reduction of a list of nonzero rational radicands.
RadicandSet normalize(const std::vector<RatFnC>& originals);

/// Case classification including the genus-0 obstruction via the F2-span of
/// the reduced radicands over a gcd-free factor basis.
RadicandCase classify(const RadicandSet& R);

/// Decide real-[0,1] and complex-[0,1] admissibility; conditions recorded.
VariantEligibility check_unit_interval_admissibility(const RadicandCase& c, const RadicandSet& R);

/// Convenience: normalize + classify + eligibility.
RadicandCase analyze(const std::vector<RatFnC>& originals, RadicandSet* out_set = nullptr);

}  // namespace radix
