#pragma once

#include "radix/words.hpp"

namespace radix {

/// Numeric value of a nested integral word at x in (0,1], within tol.
/// Spectral quadrature per layer with a square-root substitution at the base
/// point; divergent words are rejected up front.
double eval_word(const IntegralWord& w, double x, double tol = 1e-10);

}  // namespace radix
