#include "radix/parser.hpp"

#include <cctype>
#include <sstream>

namespace radix {

parse_error::parse_error(const std::string& msg, int l, int c)
    : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg),
      line(l),
      col(c)
{
}

namespace {

struct Token {
    enum Kind { Num, Ident, Punct, End } kind = End;
    std::string text;
    Rat value = 0;
    int line = 1, col = 1;
};

std::vector<Token> lex(const std::string& src)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    const std::string punct = "+-*/^(){}[],;=|";
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            if (j < src.size() && src[j] == '.')
                throw parse_error("decimal literals are not supported; use exact rationals", line,
                                  col);
            t.kind = Token::Num;
            t.text = src.substr(i, j - i);
            t.value = Rat(Int(t.text));
            col += int(j - i);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            t.kind = Token::Ident;
            t.text = src.substr(i, j - i);
            col += int(j - i);
            i = j;
        } else if (punct.find(c) != std::string::npos) {
            t.kind = Token::Punct;
            t.text = std::string(1, c);
            ++col;
            ++i;
        } else {
            throw parse_error(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

class TokStream {
public:
    explicit TokStream(const std::string& src) : toks_(lex(src)) {}

    const Token& peek(size_t ahead = 0) const
    {
        size_t k = i_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    Token next() { return toks_[std::min(i_++, toks_.size() - 1)]; }

    bool at_punct(char c) const
    {
        return peek().kind == Token::Punct && peek().text[0] == c;
    }
    bool accept_punct(char c)
    {
        if (!at_punct(c))
            return false;
        next();
        return true;
    }
    void expect_punct(char c)
    {
        if (!accept_punct(c))
            fail(std::string("expected '") + c + "'");
    }
    bool at_ident(const char* s) const
    {
        return peek().kind == Token::Ident && peek().text == s;
    }
    void expect_end()
    {
        if (peek().kind != Token::End)
            fail("unexpected trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw parse_error(msg + " (got '" +
                              (peek().kind == Token::End ? "end of input" : peek().text) + "')",
                          peek().line, peek().col);
    }

private:
    std::vector<Token> toks_;
    size_t i_ = 0;
};

Expr node(Expr::Op op, const Token& at)
{
    Expr e;
    e.op = op;
    e.line = at.line;
    e.col = at.col;
    return e;
}

Expr parse_add(TokStream& ts);

long parse_exponent(TokStream& ts)
{
    bool neg = ts.accept_punct('-');
    if (ts.peek().kind != Token::Num)
        ts.fail("exponent must be an integer literal");
    Token t = ts.next();
    long e = long(numerator(t.value).convert_to<long long>());
    return neg ? -e : e;
}

Expr parse_primary(TokStream& ts)
{
    const Token& t = ts.peek();
    if (t.kind == Token::Num) {
        Expr e = node(Expr::Op::Num, t);
        e.value = ts.next().value;
        return e;
    }
    if (t.kind == Token::Ident) {
        if (ts.at_ident("sqrt")) {
            Expr e = node(Expr::Op::Sqrt, ts.next());
            ts.expect_punct('(');
            e.args.push_back(parse_add(ts));
            ts.expect_punct(')');
            return e;
        }
        if (ts.at_ident("i"))
            return node(Expr::Op::ImagUnit, ts.next());
        Expr e = node(Expr::Op::Var, t);
        e.name = ts.next().text;
        return e;
    }
    if (ts.at_punct('(')) {
        ts.next();
        Expr e = parse_add(ts);
        ts.expect_punct(')');
        return e;
    }
    ts.fail("expected a number, variable, or parenthesized expression");
}

Expr parse_power(TokStream& ts)
{
    Expr base = parse_primary(ts);
    while (ts.at_punct('^')) {
        Token op = ts.next();
        Expr e = node(Expr::Op::Pow, op);
        e.exponent = parse_exponent(ts);
        e.args.push_back(std::move(base));
        base = std::move(e);
    }
    return base;
}

Expr parse_unary(TokStream& ts)
{
    if (ts.at_punct('-')) {
        Expr e = node(Expr::Op::Neg, ts.next());
        e.args.push_back(parse_unary(ts));
        return e;
    }
    return parse_power(ts);
}

Expr parse_mul(TokStream& ts)
{
    Expr lhs = parse_unary(ts);
    while (ts.at_punct('*') || ts.at_punct('/')) {
        Token op = ts.next();
        Expr e = node(op.text[0] == '*' ? Expr::Op::Mul : Expr::Op::Div, op);
        e.args.push_back(std::move(lhs));
        e.args.push_back(parse_unary(ts));
        lhs = std::move(e);
    }
    return lhs;
}

Expr parse_add(TokStream& ts)
{
    Expr lhs = parse_mul(ts);
    while (ts.at_punct('+') || ts.at_punct('-')) {
        Token op = ts.next();
        Expr e = node(op.text[0] == '+' ? Expr::Op::Add : Expr::Op::Sub, op);
        e.args.push_back(std::move(lhs));
        e.args.push_back(parse_mul(ts));
        lhs = std::move(e);
    }
    return lhs;
}

Cplx constant_of(const RatFnC& f, int line, int col)
{
    if (!f.is_constant())
        throw parse_error("expected a constant expression", line, col);
    if (f.is_zero())
        return Cplx(Alg(0));
    return f.num().coeff(0) * f.den().coeff(0).inv();
}

}  // namespace

Expr parse_expression(const std::string& src)
{
    TokStream ts(src);
    Expr e = parse_add(ts);
    ts.expect_end();
    return e;
}

RatFnC evaluate(const Expr& e, Field* F, std::string* var_name)
{
    switch (e.op) {
    case Expr::Op::Num:
        return RatFnC(Cplx(Alg(e.value)));
    case Expr::Op::ImagUnit:
        return RatFnC(Cplx(Alg(0), Alg(1)));
    case Expr::Op::Var:
        if (var_name) {
            if (!var_name->empty() && *var_name != e.name)
                throw parse_error("expression mixes variables '" + *var_name + "' and '" + e.name +
                                      "'",
                                  e.line, e.col);
            *var_name = e.name;
        } else {
            throw parse_error("variable '" + e.name + "' not allowed in a constant expression",
                              e.line, e.col);
        }
        return RatFnC::variable();
    case Expr::Op::Add:
        return evaluate(e.args[0], F, var_name) + evaluate(e.args[1], F, var_name);
    case Expr::Op::Sub:
        return evaluate(e.args[0], F, var_name) - evaluate(e.args[1], F, var_name);
    case Expr::Op::Mul:
        return evaluate(e.args[0], F, var_name) * evaluate(e.args[1], F, var_name);
    case Expr::Op::Neg:
        return -evaluate(e.args[0], F, var_name);
    case Expr::Op::Div: {
        RatFnC rhs = evaluate(e.args[1], F, var_name);
        if (rhs.is_zero())
            throw parse_error("division by zero", e.line, e.col);
        return evaluate(e.args[0], F, var_name) / rhs;
    }
    case Expr::Op::Pow: {
        RatFnC base = evaluate(e.args[0], F, var_name);
        if (e.exponent < 0 && base.is_zero())
            throw parse_error("zero raised to a negative power", e.line, e.col);
        return base.pow(e.exponent);
    }
    case Expr::Op::Sqrt: {
        RatFnC arg = evaluate(e.args[0], F, var_name);
        if (!arg.is_constant())
            throw parse_error("sqrt of a non-constant expression; pass radicands unsqrt'd", e.line,
                              e.col);
        if (!F)
            throw parse_error("sqrt not allowed in this context", e.line, e.col);
        return RatFnC(F->sqrt(constant_of(arg, e.line, e.col)));
    }
    }
    throw parse_error("malformed expression tree", e.line, e.col);
}

RatFnC parse_rational_function(const std::string& src, Field& F)
{
    std::string var;
    return evaluate(parse_expression(src), &F, &var);
}

Cplx parse_scalar(const std::string& src, Field* F)
{
    Expr e = parse_expression(src);
    return constant_of(evaluate(e, F, nullptr), e.line, e.col);
}

namespace {

Cplx parse_scalar_tok(TokStream& ts)
{
    const Token& at = ts.peek();
    Expr e = parse_add(ts);
    try {
        return constant_of(evaluate(e, nullptr, nullptr), e.line, e.col);
    } catch (const domain_error& ex) {
        throw parse_error(ex.what(), at.line, at.col);
    }
}

std::vector<Cplx> parse_root_set(TokStream& ts)
{
    ts.expect_punct('{');
    std::vector<Cplx> roots;
    do
        roots.push_back(parse_scalar_tok(ts));
    while (ts.accept_punct(','));
    ts.expect_punct('}');
    return roots;
}

Letter parse_letter(TokStream& ts)
{
    const Token& at = ts.peek();
    try {
        if (ts.at_punct('{'))
            return Letter::sqrt_set(parse_root_set(ts));
        if (ts.at_punct('(') &&
            (ts.peek(1).kind == Token::Punct && ts.peek(1).text == "{")) {
            ts.next();
            std::vector<Cplx> roots = parse_root_set(ts);
            ts.expect_punct(',');
            long j = parse_exponent(ts);
            ts.expect_punct(')');
            return Letter::power_times_sqrt(std::move(roots), int(j));
        }
        if (ts.at_punct('(')) {
            // could be (a,{...}) or just a parenthesized scalar
            ts.next();
            Cplx a = parse_scalar_tok(ts);
            if (ts.accept_punct(',')) {
                std::vector<Cplx> roots = parse_root_set(ts);
                ts.expect_punct(')');
                return Letter::rat_times_sqrt(a, std::move(roots));
            }
            ts.expect_punct(')');
            return Letter::rat(a);
        }
        return Letter::rat(parse_scalar_tok(ts));
    } catch (const usage_error& ex) {
        throw parse_error(ex.what(), at.line, at.col);
    }
}

std::string rat_str(const Rat& q)
{
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string scalar_str(const Cplx& z)
{
    if (!z.re.is_rational() || !z.im.is_rational())
        return z.str();  // not re-parseable; tower elements have no literal form
    Rat re = z.re.rational_value(), im = z.im.rational_value();
    if (im == 0)
        return rat_str(re);
    std::string imag = im == 1 ? "i" : im == -1 ? "-i" : rat_str(im) + "*i";
    if (re == 0)
        return imag;
    return rat_str(re) + (im > 0 ? "+" : "") + imag;
}

}  // namespace

IntegralWord parse_word(const std::string& src)
{
    TokStream ts(src);
    if (!ts.at_ident("H"))
        ts.fail("expected 'H'");
    ts.next();
    ts.expect_punct('[');
    IntegralWord w;
    if (!ts.at_punct(';') && !ts.at_punct('|') && !ts.at_punct(']')) {
        do
            w.letters.push_back(parse_letter(ts));
        while (ts.accept_punct(','));
    }
    if (ts.accept_punct(';') || ts.accept_punct('|')) {
        if (!ts.at_ident("base"))
            ts.fail("expected 'base'");
        ts.next();
        ts.expect_punct('=');
        if (ts.peek().kind != Token::Num || (ts.peek().value != 0 && ts.peek().value != 1))
            ts.fail("base must be 0 or 1");
        w.basePoint = ts.next().value == 0 ? 0 : 1;
    }
    ts.expect_punct(']');
    ts.expect_end();
    return w;
}

std::string print_word(const IntegralWord& w)
{
    std::ostringstream os;
    os << "H[";
    bool first = true;
    for (const Letter& l : w.letters) {
        if (!first)
            os << ",";
        first = false;
        switch (l.kind()) {
        case Letter::Kind::Rat:
            os << scalar_str(l.pole());
            break;
        case Letter::Kind::SqrtSet:
        case Letter::Kind::RatTimesSqrt:
        case Letter::Kind::PowerTimesSqrt: {
            if (l.kind() == Letter::Kind::RatTimesSqrt)
                os << "(" << scalar_str(l.pole()) << ",";
            else if (l.kind() == Letter::Kind::PowerTimesSqrt)
                os << "(";
            os << "{";
            bool f2 = true;
            for (const Cplx& a : l.roots()) {
                if (!f2)
                    os << ",";
                f2 = false;
                os << scalar_str(a);
            }
            os << "}";
            if (l.kind() == Letter::Kind::PowerTimesSqrt)
                os << "," << l.power() << ")";
            else if (l.kind() == Letter::Kind::RatTimesSqrt)
                os << ")";
            break;
        }
        case Letter::Kind::GenericRational:
            throw usage_error("print_word: free rational letters have no word syntax");
        }
    }
    os << "; base=" << w.basePoint << "]";
    return os.str();
}

namespace {

Prefactor invert(const Prefactor& p, const Token& at)
{
    if (p.delta)
        throw parse_error("delta factor inside inv()", at.line, at.col);
    Prefactor q;
    if (p.scale.is_zero())
        throw parse_error("inv of zero", at.line, at.col);
    q.scale = p.scale.inv();
    q.geo = p.geo.inv();
    q.npow = -p.npow;
    q.binpow = -p.binpow;
    q.odd = -p.odd;
    return q;
}

std::vector<Prefactor> parse_layers(TokStream& ts, bool outer);

void expect_index(TokStream& ts, std::string& var)
{
    if (ts.peek().kind != Token::Ident)
        ts.fail("expected the summation index");
    std::string name = ts.next().text;
    if (var.empty())
        var = name;
    else if (var != name)
        throw parse_error("layer mixes indices '" + var + "' and '" + name + "'", ts.peek().line,
                          ts.peek().col);
}

/// One factor of a layer product; returns false when an inner sum S(...) was
/// consumed (it must be the last factor).
bool parse_factor(TokStream& ts, std::string& var, Prefactor& p,
                  std::vector<Prefactor>& inner)
{
    const Token& at = ts.peek();
    if (ts.accept_punct('-')) {
        p.scale = -p.scale;
        return parse_factor(ts, var, p, inner);
    }
    if (ts.at_ident("inv")) {
        ts.next();
        ts.expect_punct('(');
        Prefactor q;
        std::vector<Prefactor> dummy;
        do {
            if (!parse_factor(ts, var, q, dummy))
                throw parse_error("inner sum inside inv()", at.line, at.col);
        } while (ts.accept_punct('*'));
        ts.expect_punct(')');
        p = p * invert(q, at);
        return true;
    }
    if (ts.at_ident("binom")) {
        ts.next();
        ts.expect_punct('(');
        if (ts.peek().kind != Token::Num || ts.peek().value != 2)
            ts.fail("expected binom(2n,n)");
        ts.next();
        expect_index(ts, var);
        ts.expect_punct(',');
        expect_index(ts, var);
        ts.expect_punct(')');
        int k = 1;
        if (ts.accept_punct('^'))
            k = int(parse_exponent(ts));
        p = p * Prefactor::binom_power(k);
        return true;
    }
    if (ts.at_ident("delta")) {
        ts.next();
        ts.expect_punct('(');
        if (ts.peek().kind != Token::Num || ts.peek().value != 1)
            ts.fail("expected delta(1,n)");
        ts.next();
        ts.expect_punct(',');
        expect_index(ts, var);
        ts.expect_punct(')');
        p = p * Prefactor::kronecker();
        return true;
    }
    if (ts.at_ident("S")) {
        ts.next();
        ts.expect_punct('(');
        inner = parse_layers(ts, false);
        ts.expect_punct(')');
        return false;
    }
    if (ts.peek().kind == Token::Num) {
        Rat v = ts.next().value;
        if (ts.accept_punct('/')) {
            if (ts.peek().kind != Token::Num || ts.peek().value == 0)
                ts.fail("expected a nonzero integer denominator");
            v /= ts.next().value;
        }
        if (ts.accept_punct('^')) {
            expect_index(ts, var);
            p = p * Prefactor::geometric(Alg(v));
        } else {
            p = p * Prefactor::constant(Alg(v));
        }
        return true;
    }
    if (ts.at_punct('(')) {
        // (2n+1) or a parenthesized rational base of c^n
        ts.next();
        if (ts.peek().kind == Token::Num && ts.peek().value == 2 &&
            ts.peek(1).kind == Token::Ident) {
            ts.next();
            expect_index(ts, var);
            ts.expect_punct('+');
            if (ts.peek().kind != Token::Num || ts.peek().value != 1)
                ts.fail("expected (2n+1)");
            ts.next();
            ts.expect_punct(')');
            p = p * invert(Prefactor::inv_odd(), at);
            return true;
        }
        Cplx c = parse_scalar_tok(ts);
        ts.expect_punct(')');
        if (!c.is_real())
            throw parse_error("geometric base must be real", at.line, at.col);
        if (ts.accept_punct('^')) {
            expect_index(ts, var);
            p = p * Prefactor::geometric(c.re);
        } else {
            p = p * Prefactor::constant(c.re);
        }
        return true;
    }
    if (ts.peek().kind == Token::Ident) {
        expect_index(ts, var);
        int k = 1;
        if (ts.accept_punct('^'))
            k = int(parse_exponent(ts));
        p = p * Prefactor::n_power(k);
        return true;
    }
    ts.fail("expected a prefactor");
}

std::vector<Prefactor> parse_layers(TokStream& ts, bool outer)
{
    std::string var;
    Prefactor p;
    std::vector<Prefactor> inner;
    if (outer) {
        if (!ts.at_ident("x"))
            ts.fail("expected 'x^n'");
        ts.next();
        ts.expect_punct('^');
        expect_index(ts, var);
        if (!ts.accept_punct('*')) {
            std::vector<Prefactor> out = {p};
            return out;
        }
    }
    bool more = true;
    while (more) {
        more = parse_factor(ts, var, p, inner) && ts.accept_punct('*');
    }
    std::vector<Prefactor> out = {p};
    out.insert(out.end(), inner.begin(), inner.end());
    return out;
}

const char* index_name(size_t depth)
{
    static const char* names[] = {"n", "i", "j", "k", "l", "m"};
    return names[depth < 6 ? depth : 5];
}

std::string layer_str(const Prefactor& p, const std::string& v, bool outer)
{
    std::vector<std::string> parts;
    if (outer)
        parts.push_back("x^" + v);
    if (!(p.scale == Alg(1))) {
        if (p.scale.is_rational())
            parts.push_back(rat_str(p.scale.rational_value()));
        else
            parts.push_back("(" + p.scale.str() + ")");
    }
    if (!(p.geo == Alg(1))) {
        std::string base = p.geo.is_rational() ? rat_str(p.geo.rational_value()) : p.geo.str();
        parts.push_back("(" + base + ")^" + v);
    }
    if (p.npow > 0)
        parts.push_back(p.npow == 1 ? v : v + "^" + std::to_string(p.npow));
    if (p.binpow > 0) {
        std::string b = "binom(2" + v + "," + v + ")";
        parts.push_back(p.binpow == 1 ? b : b + "^" + std::to_string(p.binpow));
    }
    for (int k = 0; k > p.odd; --k)
        parts.push_back("(2" + v + "+1)");
    std::vector<std::string> inv;
    if (p.npow < 0)
        inv.push_back(p.npow == -1 ? v : v + "^" + std::to_string(-p.npow));
    if (p.binpow < 0) {
        std::string b = "binom(2" + v + "," + v + ")";
        inv.push_back(p.binpow == -1 ? b : b + "^" + std::to_string(-p.binpow));
    }
    for (int k = 0; k < p.odd; ++k)
        inv.push_back("(2" + v + "+1)");
    if (!inv.empty()) {
        std::string body = inv[0];
        for (size_t k = 1; k < inv.size(); ++k)
            body += "*" + inv[k];
        parts.push_back("inv(" + body + ")");
    }
    if (p.delta)
        parts.push_back("delta(1," + v + ")");
    if (parts.empty())
        parts.push_back("1");
    std::string out = parts[0];
    for (size_t k = 1; k < parts.size(); ++k)
        out += "*" + parts[k];
    return out;
}

}  // namespace

SumExpr parse_sum(const std::string& src)
{
    TokStream ts(src);
    if (!ts.at_ident("sum"))
        ts.fail("expected 'sum'");
    ts.next();
    ts.expect_punct('(');
    SumExpr s;
    s.layers = parse_layers(ts, true);
    ts.expect_punct(')');
    ts.expect_end();
    return s;
}

std::string print_sum(const SumExpr& s)
{
    std::string out = "sum(";
    for (size_t d = 0; d < s.layers.size(); ++d) {
        if (d > 0)
            out += "*S(";
        out += layer_str(s.layers[d], index_name(d), d == 0);
    }
    for (size_t d = 1; d < s.layers.size(); ++d)
        out += ")";
    return out + ")";
}

}  // namespace radix
