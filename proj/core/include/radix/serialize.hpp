#pragma once

#include <json.hpp>

#include "radix/catalog.hpp"
#include "radix/words.hpp"

namespace radix {

/// Human-readable form of a quotient-algebra element: rational coefficients
/// times sqrt(f_i(var)) factors.
std::string sqrt_expr_str(const SqrtExprC& e, const std::string& var);

/// Versioned machine-readable encodings; every object carries "schema": 1.
nlohmann::json to_json(const Transformation& t);
nlohmann::json to_json(const Letter& l);
nlohmann::json to_json(const IntegralWord& w);
nlohmann::json to_json(const WordCombination& c);

std::string to_latex(const RatFnC& f, const std::string& var);
std::string to_latex(const IntegralWord& w);
std::string to_latex(const WordCombination& c);

}  // namespace radix
