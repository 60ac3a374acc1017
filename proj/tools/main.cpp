#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>

#include "radix/parser.hpp"
#include "radix/quadrature.hpp"
#include "radix/serialize.hpp"
#include "radix/verifier.hpp"

using namespace radix;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitNoTransformation = 2;
constexpr int kExitIneligible = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitDivergence = 5;

std::complex<double> cd(const Cplx& z) { return {z.re.to_double(), z.im.to_double()}; }

std::complex<double> eval_poly(const PolyC& p, std::complex<double> x)
{
    std::complex<double> v = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        v = v * x + cd(*it);
    return v;
}

std::complex<double> eval_ratfn(const RatFnC& f, std::complex<double> x)
{
    return eval_poly(f.num(), x) / eval_poly(f.den(), x);
}

double inverse_at(const Transformation& t, double x)
{
    std::vector<std::complex<double>> roots;
    for (const PolyC& f : t.ctx->radicands)
        roots.push_back(std::sqrt(eval_poly(f, x)));
    return t.gInverse.eval(x, roots, eval_ratfn).real();
}

Variant parse_variant(const std::string& s)
{
    if (s == "general")
        return Variant::General;
    if (s == "real01")
        return Variant::RealUnitInterval;
    if (s == "complex01")
        return Variant::ComplexUnitInterval;
    throw CLI::ValidationError("--variant", "expected general, real01, or complex01");
}

double default_tolerance()
{
    if (const char* p = std::getenv("RADIX_PRECISION")) {
        double v = std::atof(p);
        if (v > 0)
            return v;
    }
    return 1e-10;
}

struct exit_code {
    int code;
};

Transformation build_transformation(const std::vector<std::string>& radicand_srcs,
                                    const std::string& variant, const std::string& lambda,
                                    Field& F, RadicandSet* set_out, RadicandCase* case_out)
{
    std::vector<RatFnC> fs;
    for (const std::string& s : radicand_srcs)
        fs.push_back(parse_rational_function(s, F));
    RadicandCase c = analyze(fs, set_out);
    if (case_out)
        *case_out = c;
    if (c.tag == CaseTag::NoTransformation) {
        std::cout << "case: " << case_tag_name(c.tag) << "\n";
        std::cout << "witness: " << c.witness.str("x")
                  << " (squarefree of degree >= 3; no rational parametrization exists)\n";
        throw exit_code{kExitNoTransformation};
    }
    if (c.tag == CaseTag::Empty) {
        std::cout << "case: Empty\n";
        std::cout << "all radicands are squares; the identity x = y rationalizes\n";
        throw exit_code{0};
    }
    Variant v = parse_variant(variant);
    Transformation t;
    try {
        t = v == Variant::General ? general_transformation(c, F)
                                  : unit_interval_transformation(c, v, F);
    } catch (const usage_error& e) {
        std::cerr << "ineligible: " << e.what() << "\n";
        throw exit_code{kExitIneligible};
    }
    if (!lambda.empty()) {
        Cplx l = parse_scalar(lambda);
        if (!l.is_real())
            throw CLI::ValidationError("--lambda", "must be a positive rational");
        try {
            t = compose_moebius(t, l.re);
        } catch (const usage_error& e) {
            std::cerr << "ineligible: " << e.what() << "\n";
            throw exit_code{kExitIneligible};
        }
    }
    return t;
}

void print_transformation_plain(const Transformation& t)
{
    std::cout << "case: " << case_tag_name(t.caseinfo.tag) << "\n";
    std::cout << "variant: " << variant_name(t.variant) << "\n";
    std::cout << "g(y) = " << t.g.str("y") << "\n";
    std::cout << "gInverse(x) = " << sqrt_expr_str(t.gInverse, "x") << "\n";
    if (t.gInverseAlt)
        std::cout << "gInverseAlt(x) = " << sqrt_expr_str(*t.gInverseAlt, "x") << "\n";
    for (size_t k = 0; k < t.sqrtImages.size(); ++k)
        std::cout << "sqrt(" << t.imageRadicands[k].str("x")
                  << ") -> " << t.sqrtImages[k].str("y") << "\n";
    for (const auto& s : t.splitImages)
        std::cout << "split image: (" << s.re.str("y") << ") + i*(" << s.im.str("y") << ")\n";
    if (!t.validityNote.empty())
        std::cout << "validity: " << t.validityNote << "\n";
}

int run_verify(const Transformation& t, const RadicandSet& set)
{
    bool all = true;
    RationalizeReport rr = verify_rationalizes(t, set);
    std::cout << "verify_rationalizes: " << (rr.pass ? "pass" : "FAIL") << "\n";
    all = all && rr.pass;
    InverseReport ir = verify_inverse(t);
    std::cout << "verify_inverse: " << (ir.pass ? "pass" : "FAIL") << "\n";
    all = all && ir.pass;
    if (t.variant == Variant::General) {
        bool p = verify_puiseux_branch(t);
        std::cout << "puiseux_branch: " << (p ? "pass" : "FAIL") << "\n";
        all = all && p;
    } else {
        BijectionCertificate bc = verify_unit_interval_bijection(t);
        std::cout << "unit_interval_bijection: " << (bc.pass ? "pass" : "FAIL") << "\n";
        all = all && bc.pass;
    }
    return all ? 0 : 1;
}

double prefactor_at(const Prefactor& p, long n)
{
    if (p.delta && n != 1)
        return 0.0;
    double b = 1;
    for (long k = 1; k <= n; ++k)
        b *= double(n + k) / double(k);
    double v = p.scale.to_double() * std::pow(p.geo.to_double(), double(n)) *
               std::pow(double(n), p.npow) * std::pow(b, p.binpow);
    for (int k = 0; k < p.odd; ++k)
        v /= double(2 * n + 1);
    for (int k = 0; k > p.odd; --k)
        v *= double(2 * n + 1);
    return v;
}

double sum_layers(const std::vector<Prefactor>& layers, size_t j, long bound)
{
    double total = 0;
    for (long i = 1; i <= bound; ++i) {
        double v = prefactor_at(layers[j], i);
        if (v == 0.0)
            continue;
        if (j + 1 < layers.size())
            v *= sum_layers(layers, j + 1, i);
        total += v;
    }
    return total;
}

double sum_value(const SumExpr& s, double x, long terms)
{
    double total = 0;
    for (long n = 1; n <= terms; ++n) {
        double v = std::pow(x, double(n)) * prefactor_at(s.layers[0], n);
        if (v != 0.0 && s.layers.size() > 1)
            v *= sum_layers(s.layers, 1, n);
        total += v;
    }
    return total;
}

double combination_value(const WordCombination& c, double x, double tol)
{
    double total = 0;
    for (const auto& [k, w] : c.terms)
        total += k.to_double() * eval_word(w, x, tol);
    return total;
}

std::string word_str(const IntegralWord& w)
{
    if (w.letters.size() == 1 && w.letters[0].kind() == Letter::Kind::GenericRational &&
        w.letters[0].fn() == RatFnC(Cplx(Alg(1))) && w.basePoint == 0)
        return "x";
    for (const Letter& l : w.letters)
        if (l.kind() == Letter::Kind::GenericRational) {
            // free rational letters have no H syntax; spell the integrands out
            std::string out = "int[";
            bool first = true;
            for (const Letter& k : w.letters) {
                if (!first)
                    out += ", ";
                first = false;
                out += k.str();
            }
            return out + "; base=" + std::to_string(w.basePoint) + "]";
        }
    return print_word(w);
}

std::string combination_str(const WordCombination& c)
{
    if (c.terms.empty())
        return "0";
    std::string out;
    for (const auto& [coeff, w] : c.terms) {
        if (!out.empty())
            out += " + ";
        if (!(coeff == Alg(1)))
            out += coeff.str() + "*";
        out += word_str(w);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rationalizing transformations and nested-integral calculus"};
    app.require_subcommand(1);
    double tol = default_tolerance();

    std::vector<std::string> radicands;
    std::string variant = "general", format = "plain", lambda;
    bool verify = false;

    auto* rat = app.add_subcommand("rationalize",
                                   "classify radicands and emit a rationalizing substitution");
    rat->add_option("radicands", radicands, "radicand expressions in x")->required();
    rat->add_option("--variant", variant, "general, real01, or complex01");
    rat->add_option("--lambda", lambda, "Moebius reparametrization parameter (rational > 0)");
    rat->add_option("--format", format, "plain, latex, or json");
    rat->add_flag("--verify", verify, "run the exact verification certificates");

    std::string word_src;
    bool check = false;
    auto* tr = app.add_subcommand("transform-integral",
                                  "apply the substitution to every level of a nested integral");
    tr->add_option("word", word_src, "H[...] word")->required();
    tr->add_option("--radicands", radicands, "radicand expressions in x")->required();
    tr->add_option("--variant", variant, "general, real01, or complex01");
    tr->add_option("--lambda", lambda, "Moebius reparametrization parameter");
    tr->add_option("--format", format, "plain, latex, or json");
    tr->add_flag("--check", check, "numeric equality check at sample points");

    std::string sum_src, xarg = "1/5";
    long series_n = 0;
    auto* s2 = app.add_subcommand("sum2int", "rewrite a nested sum into nested-integral words");
    s2->add_option("sum", sum_src, "sum(x^n * ...) expression")->required();
    s2->add_option("--check-series", series_n, "compare against N-term direct summation");
    s2->add_option("--x", xarg, "sample point for the series check");
    s2->add_option("--format", format, "plain, latex, or json");

    std::string eval_word_src;
    double eval_x = 0.5;
    auto* ev = app.add_subcommand("eval", "numerically evaluate a nested-integral word");
    ev->add_option("word", eval_word_src, "H[...] word")->required();
    ev->add_option("x", eval_x, "evaluation point in (0,1]")->required();
    ev->add_option("--tol", tol, "target accuracy");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rat->parsed()) {
            Field F;
            RadicandSet set;
            RadicandCase c;
            Transformation t = build_transformation(radicands, variant, lambda, F, &set, &c);
            if (format == "json")
                std::cout << to_json(t).dump(2) << "\n";
            else if (format == "latex") {
                std::cout << "g(y) = " << to_latex(t.g, "y") << "\n";
                std::cout << "g^{-1}(x) = " << sqrt_expr_str(t.gInverse, "x") << "\n";
            } else
                print_transformation_plain(t);
            if (verify)
                return run_verify(t, set);
            return 0;
        }

        if (tr->parsed()) {
            Field F;
            RadicandSet set;
            RadicandCase c;
            Transformation t = build_transformation(radicands, variant, lambda, F, &set, &c);
            IntegralWord w = parse_word(word_src);
            IntegralWord tw;
            try {
                tw = transform_word(w, t, F);
            } catch (const usage_error& e) {
                std::cerr << "ineligible: " << e.what() << "\n";
                return kExitIneligible;
            }
            if (format == "json")
                std::cout << to_json(tw).dump(2) << "\n";
            else if (format == "latex")
                std::cout << to_latex(tw) << "\n";
            else {
                std::cout << "prefactor: " << tw.prefactor.str() << "\n";
                for (const Letter& l : tw.letters)
                    std::cout << "letter: " << l.str() << "\n";
            }
            if (check) {
                bool pass = true;
                for (double x : {0.25, 0.5, 0.75}) {
                    double lhs = eval_word(w, x, tol);
                    double rhs = eval_word(tw, inverse_at(t, x), tol);
                    bool ok = std::abs(lhs - rhs) < 1e-8;
                    pass = pass && ok;
                    std::cout << "check x=" << x << ": " << lhs << " vs " << rhs << " "
                              << (ok ? "pass" : "FAIL") << "\n";
                }
                return pass ? 0 : 1;
            }
            return 0;
        }

        if (s2->parsed()) {
            SumExpr s = parse_sum(sum_src);
            WordCombination gf;
            try {
                gf = to_generating_function(s);
            } catch (const unsupported_sum_error& e) {
                std::cerr << "unsupported: " << e.what() << "\n";
                return kExitUnsupported;
            }
            if (format == "json")
                std::cout << to_json(gf).dump(2) << "\n";
            else if (format == "latex")
                std::cout << to_latex(gf) << "\n";
            else
                std::cout << combination_str(gf) << "\n";
            if (series_n > 0) {
                Cplx xv = parse_scalar(xarg);
                double x = cd(xv).real();
                double direct = sum_value(s, x, series_n);
                double words = combination_value(gf, x, tol);
                bool ok = std::abs(direct - words) < 1e-6;
                std::cout << "series check x=" << x << ": " << direct << " vs " << words << " "
                          << (ok ? "pass" : "FAIL") << "\n";
                return ok ? 0 : 1;
            }
            return 0;
        }

        if (ev->parsed()) {
            IntegralWord w = parse_word(eval_word_src);
            double v;
            try {
                v = eval_word(w, eval_x, tol);
            } catch (const divergence_error& e) {
                std::cerr << "divergent: " << e.what() << "\n";
                return kExitDivergence;
            }
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10f", v);
            std::cout << buf << "\n";
            return 0;
        }
    } catch (const exit_code& e) {
        return e.code;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
