#include "radix/serialize.hpp"

#include <sstream>

namespace radix {

namespace {

std::string cplx_str(const Cplx& z) { return z.str(); }

std::string latex_scalar(const Cplx& z)
{
    if (z.im.is_zero() && z.re.is_rational()) {
        std::ostringstream os;
        os << z.re.rational_value();
        return os.str();
    }
    return z.str();
}

}  // namespace

std::string sqrt_expr_str(const SqrtExprC& e, const std::string& var)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, coeff] : e.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << coeff.str(var) << ")";
        for (unsigned i = 0; mask >> i; ++i)
            if (mask & (1u << i))
                os << "*sqrt(" << e.ctx()->radicands[i].str(var) << ")";
    }
    return os.str();
}

nlohmann::json to_json(const Transformation& t)
{
    nlohmann::json j;
    j["schema"] = 1;
    j["variant"] = variant_name(t.variant);
    j["case"] = case_tag_name(t.caseinfo.tag);
    j["g"] = {{"var", "y"}, {"num", t.g.num().str("y")}, {"den", t.g.den().str("y")}};
    j["gInverse"] = sqrt_expr_str(t.gInverse, "x");
    if (t.gInverseAlt)
        j["gInverseAlt"] = sqrt_expr_str(*t.gInverseAlt, "x");
    nlohmann::json radicands = nlohmann::json::array();
    for (const PolyC& f : t.ctx->radicands)
        radicands.push_back(f.str("x"));
    j["radicands"] = radicands;
    nlohmann::json images = nlohmann::json::array();
    for (size_t k = 0; k < t.sqrtImages.size(); ++k)
        images.push_back({{"radicand", t.imageRadicands[k].str("x")},
                          {"image", t.sqrtImages[k].str("y")}});
    j["images"] = images;
    if (!t.splitImages.empty()) {
        nlohmann::json split = nlohmann::json::array();
        for (const auto& s : t.splitImages)
            split.push_back({{"re", s.re.str("y")}, {"im", s.im.str("y")}});
        j["splitImages"] = split;
    }
    if (t.liftedInverse)
        j["liftedInverse"] = sqrt_expr_str(*t.liftedInverse, "x");
    if (!t.validityNote.empty())
        j["validity"] = t.validityNote;
    return j;
}

nlohmann::json to_json(const Letter& l)
{
    nlohmann::json j;
    switch (l.kind()) {
    case Letter::Kind::Rat:
        j["kind"] = "rat";
        j["pole"] = cplx_str(l.pole());
        break;
    case Letter::Kind::SqrtSet:
        j["kind"] = "sqrt_set";
        break;
    case Letter::Kind::RatTimesSqrt:
        j["kind"] = "rat_times_sqrt";
        j["pole"] = cplx_str(l.pole());
        break;
    case Letter::Kind::PowerTimesSqrt:
        j["kind"] = "power_times_sqrt";
        j["power"] = l.power();
        break;
    case Letter::Kind::GenericRational:
        j["kind"] = "rational";
        j["num"] = l.fn().num().str("t");
        j["den"] = l.fn().den().str("t");
        break;
    }
    if (!l.roots().empty()) {
        nlohmann::json roots = nlohmann::json::array();
        for (const Cplx& a : l.roots())
            roots.push_back(cplx_str(a));
        j["roots"] = roots;
    }
    return j;
}

nlohmann::json to_json(const IntegralWord& w)
{
    nlohmann::json j;
    j["schema"] = 1;
    j["base"] = w.basePoint;
    j["prefactor"] = w.prefactor.str();
    nlohmann::json letters = nlohmann::json::array();
    for (const Letter& l : w.letters)
        letters.push_back(to_json(l));
    j["letters"] = letters;
    return j;
}

nlohmann::json to_json(const WordCombination& c)
{
    nlohmann::json j;
    j["schema"] = 1;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [coeff, w] : c.terms)
        terms.push_back({{"coeff", coeff.str()}, {"word", to_json(w)}});
    j["terms"] = terms;
    return j;
}

std::string to_latex(const RatFnC& f, const std::string& var)
{
    if (f.is_polynomial())
        return f.num().str(var);
    return "\\frac{" + f.num().str(var) + "}{" + f.den().str(var) + "}";
}

namespace {

std::string latex_letter(const Letter& l)
{
    auto set_str = [&] {
        std::string out = "\\{";
        bool first = true;
        for (const Cplx& a : l.roots()) {
            if (!first)
                out += ",";
            first = false;
            out += latex_scalar(a);
        }
        return out + "\\}";
    };
    switch (l.kind()) {
    case Letter::Kind::Rat:
        return latex_scalar(l.pole());
    case Letter::Kind::SqrtSet:
        return set_str();
    case Letter::Kind::RatTimesSqrt:
        return "(" + latex_scalar(l.pole()) + "," + set_str() + ")";
    case Letter::Kind::PowerTimesSqrt:
        return "(" + set_str() + "," + std::to_string(l.power()) + ")";
    case Letter::Kind::GenericRational:
        return to_latex(l.fn(), "t");
    }
    return "";
}

}  // namespace

std::string to_latex(const IntegralWord& w)
{
    std::string out;
    if (!(w.prefactor == Alg(1)))
        out += w.prefactor.str() + "\\,";
    out += "\\mathop{H}";
    if (w.basePoint == 1)
        out += "^{[1]}";
    out += "_{";
    bool first = true;
    for (const Letter& l : w.letters) {
        if (!first)
            out += ",";
        first = false;
        out += latex_letter(l);
    }
    return out + "}(x)";
}

std::string to_latex(const WordCombination& c)
{
    if (c.terms.empty())
        return "0";
    std::string out;
    for (const auto& [coeff, w] : c.terms) {
        std::string body = to_latex(w);
        if (coeff == Alg(1))
            out += out.empty() ? body : " + " + body;
        else if (coeff == Alg(-1))
            out += out.empty() ? "-" + body : " - " + body;
        else
            out += (out.empty() ? "" : " + ") + coeff.str() + "\\," + body;
    }
    return out;
}

}  // namespace radix
