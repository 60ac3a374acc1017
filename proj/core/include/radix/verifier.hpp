#pragma once

#include "radix/catalog.hpp"

namespace radix {

/// Per-radicand outcome of the rationalization check: f(g(y)) = constant * image^2.
struct RationalizeEntry {
    PolyC radicand;
    bool ok = false;
    Cplx constant;
    RatFnC image;
};

struct RationalizeReport {
    bool pass = false;
    std::vector<RationalizeEntry> entries;
};

/// Check that g turns every reduced radicand into a constant times a square.
RationalizeReport verify_rationalizes(const Transformation& t, const RadicandSet& R);

struct InverseReport {
    bool pass = false;
    /// true when the check could not even be posed (denominator of the
    /// inverse vanishes identically in the quotient algebra)
    bool structural_failure = false;
    std::string detail;
};

/// Reduce g(gInverse(x)) - x in the quotient algebra C(x)[r_1..r_k]/(r_i^2 - f_i).
/// Expressions over pairwise-product radicands are first rewritten over the
/// single-root symbols, where the algebra is a field.
InverseReport verify_inverse(const Transformation& t);

struct BijectionCertificate {
    bool pass = false;
    bool endpoints_ok = false;      // g(0) = 0 and g(1) = 1
    bool denominator_ok = false;    // den(g) root-free on [0,1]
    bool increasing_ok = false;     // g' > 0 on (0,1)
    std::string failing;
};

/// Certify that g maps [0,1] bijectively onto itself, strictly increasing.
BijectionCertificate verify_unit_interval_bijection(const Transformation& t);

/// General-variant branch check: gInverse(g(y)) = y + O(y^order) as an exact
/// Puiseux series, for a consistent choice of square-root branches.
bool verify_puiseux_branch(const Transformation& t, long order = 11);

/// Advisory numeric probe: |g(gInverse(x)) - x| at x with principal-branch
/// floating-point square roots.
double inverse_probe(const Transformation& t, double x);

}  // namespace radix
