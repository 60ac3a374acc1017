#pragma once

#include <optional>

#include "radix/radicands.hpp"
#include "radix/sqrt_expr.hpp"

namespace radix {

enum class Variant { General, RealUnitInterval, ComplexUnitInterval };

const char* variant_name(Variant v);

/// A rationalizing change of variable x = g(y) together with its algebraic
/// inverse and the rational images of the square roots.
struct Transformation {
    Variant variant = Variant::General;
    RadicandCase caseinfo;

    /// symbols r_i stand for sqrt(ctx->radicands[i])
    std::shared_ptr<const SqrtCtxC> ctx;
    RatFnC g;  // in y
    SqrtExprC gInverse;
    /// the w(1)x/w(x) form of the inverse, where available
    std::optional<SqrtExprC> gInverseAlt;

    /// sqrtImages[k](y)^2 = imageRadicands[k](g(y)) exactly
    std::vector<PolyC> imageRadicands;
    std::vector<RatFnC> sqrtImages;
    struct Split {
        RatFnC re, im;
    };
    /// complex variants only: sqrtImages[k] = re + i*im with real coefficients
    std::vector<Split> splitImages;

    /// variants whose inverse formulas hold on [0,1] only also carry a
    /// restriction-free inverse over single-root radicands
    std::shared_ptr<const SqrtCtxC> liftedCtx;
    std::optional<SqrtExprC> liftedInverse;
    std::optional<SqrtExprC> liftedInverseAlt;

    std::string validityNote;
};

/// Degree-minimal transformation with g(0) = 0 over an arbitrary coefficient
/// field; throws usage_error for Empty and NoTransformation cases.
Transformation general_transformation(const RadicandCase& c, Field& F);

/// Degree-minimal transformation mapping [0,1] bijectively and monotonically
/// onto itself; variant must be RealUnitInterval or ComplexUnitInterval and
/// the case must be eligible for it (usage_error otherwise, carrying the
/// recorded violated condition).
Transformation unit_interval_transformation(const RadicandCase& c, Variant variant, Field& F);

/// Reparametrize by the Moebius map h(y) = y/((1-lambda)y + lambda), the
/// general bijection of [0,1]; lambda > 0 required, lambda = 1 is the
/// identity.
Transformation compose_moebius(const Transformation& t, const Alg& lambda);

}  // namespace radix
