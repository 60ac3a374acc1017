#pragma once

#include "radix/sums.hpp"

namespace radix {

struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, int line, int col);
    int line, col;
};

/// Expression AST: exact rational literals, one free variable, the imaginary
/// unit, arithmetic, integer powers, and sqrt of constant subexpressions.
struct Expr {
    enum class Op { Num, Var, ImagUnit, Add, Sub, Mul, Div, Neg, Pow, Sqrt };

    Op op = Op::Num;
    Rat value = 0;           // Num
    std::string name;        // Var
    long exponent = 0;       // Pow
    std::vector<Expr> args;  // operands
    int line = 1, col = 1;   // source position for diagnostics
};

/// Parse with precedence ^ > unary- > * / > + -; implicit multiplication is
/// rejected; decimal literals are rejected (exactness contract).
Expr parse_expression(const std::string& src);

/// Evaluate to an exact rational function in the expression's single free
/// variable. sqrt arguments must be constants; their roots are adjoined to
/// F's tower (pass nullptr to forbid sqrt). var_name receives the variable
/// if one occurs.
RatFnC evaluate(const Expr& e, Field* F, std::string* var_name = nullptr);

RatFnC parse_rational_function(const std::string& src, Field& F);

/// Constant expression to an exact scalar.
Cplx parse_scalar(const std::string& src, Field* F = nullptr);

/// Word syntax: H[entry, ...; base=0|1] where entry is a scalar a (reciprocal
/// linear letter), {a1,...}, (a,{a1,...}), or ({a1,...}, j).
IntegralWord parse_word(const std::string& src);
std::string print_word(const IntegralWord& w);

/// Sum syntax: sum(x^n * factors * S(factors * S(...))) with factors drawn
/// from rational literals, c^n, n^k, binom(2n,n)^k, (2n+1), delta(1,n), and
/// inv(...) of a factor product.
SumExpr parse_sum(const std::string& src);
std::string print_sum(const SumExpr& s);

}  // namespace radix
