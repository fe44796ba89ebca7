#include "abelfrac/expr.hpp"

#include "abelfrac/errors.hpp"
#include "abelfrac/specialfn.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

namespace abelfrac {

namespace {

bool is_const(const ExprPtr& e) { return e->kind() == ExprKind::Constant; }

ExprPtr make(ExprKind k, double v, Func f, ExprPtr a, ExprPtr b)
{
    return std::make_shared<const Expr>(k, v, f, std::move(a), std::move(b));
}

} // namespace

ExprPtr Expr::constant(double v) { return make(ExprKind::Constant, v, Func::Exp, nullptr, nullptr); }

ExprPtr Expr::variable() { return make(ExprKind::Variable, 0.0, Func::Exp, nullptr, nullptr); }

// Binary factories fold constant operands when the folded value is finite;
// expressions like 1/0 keep their tree and fail at eval time instead.
ExprPtr Expr::add(ExprPtr a, ExprPtr b)
{
    if (is_const(a) && is_const(b)) {
        const double v = a->constant_value() + b->constant_value();
        if (std::isfinite(v))
            return constant(v);
    }
    return make(ExprKind::Add, 0.0, Func::Exp, std::move(a), std::move(b));
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b)
{
    if (is_const(a) && is_const(b)) {
        const double v = a->constant_value() - b->constant_value();
        if (std::isfinite(v))
            return constant(v);
    }
    return make(ExprKind::Sub, 0.0, Func::Exp, std::move(a), std::move(b));
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b)
{
    if (is_const(a) && is_const(b)) {
        const double v = a->constant_value() * b->constant_value();
        if (std::isfinite(v))
            return constant(v);
    }
    return make(ExprKind::Mul, 0.0, Func::Exp, std::move(a), std::move(b));
}

ExprPtr Expr::div(ExprPtr a, ExprPtr b)
{
    if (is_const(a) && is_const(b) && b->constant_value() != 0.0) {
        const double v = a->constant_value() / b->constant_value();
        if (std::isfinite(v))
            return constant(v);
    }
    return make(ExprKind::Div, 0.0, Func::Exp, std::move(a), std::move(b));
}

ExprPtr Expr::pow(ExprPtr base, ExprPtr exponent)
{
    if (is_const(base) && is_const(exponent)) {
        const double v = std::pow(base->constant_value(), exponent->constant_value());
        if (std::isfinite(v))
            return constant(v);
    }
    return make(ExprKind::Pow, 0.0, Func::Exp, std::move(base), std::move(exponent));
}

ExprPtr Expr::neg(ExprPtr a)
{
    if (is_const(a))
        return constant(-a->constant_value());
    return make(ExprKind::Neg, 0.0, Func::Exp, std::move(a), nullptr);
}

ExprPtr Expr::call(Func f, ExprPtr arg)
{
    // calls are not folded: erf/ln of a constant stays symbolic, which keeps
    // printed trees readable and avoids folding through domain errors
    return make(ExprKind::Call, 0.0, f, std::move(arg), nullptr);
}

const char* func_name(Func f)
{
    switch (f) {
    case Func::Exp: return "exp";
    case Func::Ln: return "ln";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Sqrt: return "sqrt";
    case Func::Erf: return "erf";
    case Func::Abs: return "abs";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr run()
    {
        skip_ws();
        if (pos_ >= src_.size())
            throw ParseError("empty expression", 0);
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ < src_.size())
            fail("unexpected trailing input, expected operator or end");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + what, pos_);
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "' " + what);
    }

    ExprPtr parse_expr()
    {
        ExprPtr e = parse_term();
        for (;;) {
            if (accept('+'))
                e = Expr::add(e, parse_term());
            else if (accept('-'))
                e = Expr::sub(e, parse_term());
            else
                return e;
        }
    }

    ExprPtr parse_term()
    {
        ExprPtr e = parse_unary();
        for (;;) {
            if (accept('*'))
                e = Expr::mul(e, parse_unary());
            else if (accept('/'))
                e = Expr::div(e, parse_unary());
            else
                return e;
        }
    }

    ExprPtr parse_unary()
    {
        if (accept('-'))
            return Expr::neg(parse_unary());
        return parse_power();
    }

    ExprPtr parse_power()
    {
        ExprPtr base = parse_atom();
        if (accept('^'))
            return Expr::pow(base, parse_unary()); // right-associative
        return base;
    }

    ExprPtr parse_atom()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            expect(')', "to close parenthesized expression");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_name();
        fail("expected number, 'x', function call or '('");
    }

    ExprPtr parse_number()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
                ++pos_;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark; // 'e' belonged to something else; not a valid exponent
            }
        }
        double v = 0.0;
        const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (res.ec != std::errc() || res.ptr != src_.data() + pos_) {
            pos_ = start;
            fail("malformed number literal");
        }
        return Expr::constant(v);
    }

    ExprPtr parse_name()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == "x")
            return Expr::variable();

        std::optional<Func> f;
        if (name == "exp") f = Func::Exp;
        else if (name == "ln") f = Func::Ln;
        else if (name == "sin") f = Func::Sin;
        else if (name == "cos") f = Func::Cos;
        else if (name == "sqrt") f = Func::Sqrt;
        else if (name == "erf") f = Func::Erf;
        else if (name == "abs") f = Func::Abs;
        if (!f) {
            pos_ = start;
            throw ParseError("unknown function '" + std::string(name)
                             + "' at offset " + std::to_string(start), start);
        }
        expect('(', "after function name");
        ExprPtr arg = parse_expr();
        expect(')', "to close function argument");
        return Expr::call(*f, arg);
    }
};

} // namespace

ExprPtr parse(std::string_view source)
{
    return Parser(source).run();
}

// ---------------------------------------------------------------------------
// evaluation

double eval(const ExprPtr& e, double x)
{
    switch (e->kind()) {
    case ExprKind::Constant:
        return e->constant_value();
    case ExprKind::Variable:
        return x;
    case ExprKind::Add:
        return eval(e->left(), x) + eval(e->right(), x);
    case ExprKind::Sub:
        return eval(e->left(), x) - eval(e->right(), x);
    case ExprKind::Mul:
        return eval(e->left(), x) * eval(e->right(), x);
    case ExprKind::Div: {
        const double denom = eval(e->right(), x);
        if (denom == 0.0)
            throw DomainError("division by zero");
        return eval(e->left(), x) / denom;
    }
    case ExprKind::Pow: {
        const double base = eval(e->left(), x);
        const double expo = eval(e->right(), x);
        if (base == 0.0 && expo < 0.0)
            throw DomainError("zero raised to a negative power");
        const double v = std::pow(base, expo);
        if (std::isnan(v))
            throw DomainError("pow: negative base with non-integer exponent");
        return v;
    }
    case ExprKind::Neg:
        return -eval(e->child(), x);
    case ExprKind::Call: {
        const double a = eval(e->child(), x);
        switch (e->func()) {
        case Func::Exp: return std::exp(a);
        case Func::Ln:
            if (a <= 0.0)
                throw DomainError("ln of non-positive argument");
            return std::log(a);
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Sqrt:
            if (a < 0.0)
                throw DomainError("sqrt of negative argument");
            return std::sqrt(a);
        case Func::Erf: return erf_fn(a);
        case Func::Abs: return std::abs(a);
        }
        break;
    }
    }
    throw DomainError("eval: malformed expression node");
}

// ---------------------------------------------------------------------------
// symbolic differentiation

ExprPtr differentiate(const ExprPtr& e)
{
    using E = Expr;
    switch (e->kind()) {
    case ExprKind::Constant:
        return E::constant(0.0);
    case ExprKind::Variable:
        return E::constant(1.0);
    case ExprKind::Add:
        return E::add(differentiate(e->left()), differentiate(e->right()));
    case ExprKind::Sub:
        return E::sub(differentiate(e->left()), differentiate(e->right()));
    case ExprKind::Mul:
        return E::add(E::mul(differentiate(e->left()), e->right()),
                      E::mul(e->left(), differentiate(e->right())));
    case ExprKind::Div:
        // (u/v)' = (u'v - uv') / v^2
        return E::div(E::sub(E::mul(differentiate(e->left()), e->right()),
                             E::mul(e->left(), differentiate(e->right()))),
                      E::pow(e->right(), E::constant(2.0)));
    case ExprKind::Pow: {
        const ExprPtr& u = e->left();
        const ExprPtr& v = e->right();
        if (v->kind() == ExprKind::Constant) {
            // power rule: (u^c)' = c u^(c-1) u'
            const double c = v->constant_value();
            return E::mul(E::mul(E::constant(c), E::pow(u, E::constant(c - 1.0))),
                          differentiate(u));
        }
        // u^v = exp(v ln u):  (u^v)' = u^v (v' ln u + v u' / u)
        return E::mul(E::pow(u, v),
                      E::add(E::mul(differentiate(v), E::call(Func::Ln, u)),
                             E::div(E::mul(v, differentiate(u)), u)));
    }
    case ExprKind::Neg:
        return E::neg(differentiate(e->child()));
    case ExprKind::Call: {
        const ExprPtr& u = e->child();
        const ExprPtr du = differentiate(u);
        switch (e->func()) {
        case Func::Exp:
            return E::mul(E::call(Func::Exp, u), du);
        case Func::Ln:
            return E::div(du, u);
        case Func::Sin:
            return E::mul(E::call(Func::Cos, u), du);
        case Func::Cos:
            return E::neg(E::mul(E::call(Func::Sin, u), du));
        case Func::Sqrt:
            return E::div(du, E::mul(E::constant(2.0), E::call(Func::Sqrt, u)));
        case Func::Erf:
            // (2/sqrt(pi)) exp(-u^2) u'
            return E::mul(E::mul(E::constant(2.0 / std::sqrt(std::numbers::pi)),
                                 E::call(Func::Exp, E::neg(E::pow(u, E::constant(2.0))))),
                          du);
        case Func::Abs:
            // u' * u/|u|; undefined at u = 0 when evaluated
            return E::mul(du, E::div(u, E::call(Func::Abs, u)));
        }
        break;
    }
    }
    throw DomainError("differentiate: malformed expression node");
}

ExprPtr differentiate(const ExprPtr& e, int n)
{
    ExprPtr d = e;
    for (int i = 0; i < n; ++i)
        d = differentiate(d);
    return d;
}

// ---------------------------------------------------------------------------
// printing and structural equality

namespace {

// binding strength, higher binds tighter
int precedence(ExprKind k)
{
    switch (k) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    default: return 5;
    }
}

std::string format_constant(double v)
{
    if (v < 0.0) {
        // negative payloads print through a Neg-style leading minus
        return "-" + format_constant(-v);
    }
    char buf[40];
    // round-trip exact; %.17g keeps re-parsed trees structurally equal
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void render(const ExprPtr& e, std::string& out)
{
    const auto child = [&](const ExprPtr& c, bool need_parens) {
        if (need_parens) {
            out += '(';
            render(c, out);
            out += ')';
        } else {
            render(c, out);
        }
    };
    const int p = precedence(e->kind());
    switch (e->kind()) {
    case ExprKind::Constant:
        if (e->constant_value() < 0.0) {
            out += '(';
            out += format_constant(e->constant_value());
            out += ')';
        } else {
            out += format_constant(e->constant_value());
        }
        return;
    case ExprKind::Variable:
        out += 'x';
        return;
    case ExprKind::Add:
        child(e->left(), precedence(e->left()->kind()) < p);
        out += '+';
        child(e->right(), precedence(e->right()->kind()) <= p);
        return;
    case ExprKind::Sub:
        child(e->left(), precedence(e->left()->kind()) < p);
        out += '-';
        child(e->right(), precedence(e->right()->kind()) <= p);
        return;
    case ExprKind::Mul:
        child(e->left(), precedence(e->left()->kind()) < p);
        out += '*';
        child(e->right(), precedence(e->right()->kind()) <= p);
        return;
    case ExprKind::Div:
        child(e->left(), precedence(e->left()->kind()) < p);
        out += '/';
        child(e->right(), precedence(e->right()->kind()) <= p);
        return;
    case ExprKind::Neg:
        out += '-';
        child(e->child(), precedence(e->child()->kind()) < p);
        return;
    case ExprKind::Pow:
        // base must bind tighter than '^'; exponent re-parses as unary
        child(e->left(), precedence(e->left()->kind()) <= p);
        out += '^';
        child(e->right(), precedence(e->right()->kind()) < 3);
        return;
    case ExprKind::Call:
        out += func_name(e->func());
        out += '(';
        render(e->child(), out);
        out += ')';
        return;
    }
}

} // namespace

std::string to_string(const ExprPtr& e)
{
    std::string out;
    render(e, out);
    return out;
}

bool equal(const ExprPtr& a, const ExprPtr& b)
{
    if (a.get() == b.get())
        return true;
    if (a->kind() != b->kind())
        return false;
    switch (a->kind()) {
    case ExprKind::Constant:
        return a->constant_value() == b->constant_value();
    case ExprKind::Variable:
        return true;
    case ExprKind::Neg:
        return equal(a->child(), b->child());
    case ExprKind::Call:
        return a->func() == b->func() && equal(a->child(), b->child());
    default:
        return equal(a->left(), b->left()) && equal(a->right(), b->right());
    }
}

} // namespace abelfrac
