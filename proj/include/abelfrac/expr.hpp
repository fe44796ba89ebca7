#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace abelfrac {

// AST for a univariate expression f(x).
//
// Grammar accepted by parse():
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?          -- right-associative
//   atom   := number | 'x' | func '(' expr ')' | '(' expr ')'
// Numbers are decimal literals (optional fraction and exponent); rational
// exponents are written as quotients, e.g. x^(7/6). Unary minus binds
// looser than '^', so -x^2 parses as -(x^2).
enum class ExprKind { Constant, Variable, Add, Sub, Mul, Div, Pow, Neg, Call };

enum class Func { Exp, Ln, Sin, Cos, Sqrt, Erf, Abs };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    ExprKind kind() const noexcept { return kind_; }
    double constant_value() const noexcept { return value_; }
    Func func() const noexcept { return func_; }
    const ExprPtr& left() const noexcept { return left_; }
    const ExprPtr& right() const noexcept { return right_; }
    const ExprPtr& child() const noexcept { return left_; }

    // Factories fold subtrees whose operands are all constants; no other
    // simplification is performed.
    static ExprPtr constant(double v);
    static ExprPtr variable();
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b);
    static ExprPtr pow(ExprPtr base, ExprPtr exponent);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr call(Func f, ExprPtr arg);

    Expr(ExprKind kind, double value, Func func, ExprPtr left, ExprPtr right)
        : kind_(kind), value_(value), func_(func),
          left_(std::move(left)), right_(std::move(right)) {}

private:
    ExprKind kind_;
    double value_ = 0.0;
    Func func_ = Func::Exp;
    ExprPtr left_;
    ExprPtr right_;
};

// Parses source text; throws ParseError with a byte offset on bad input.
ExprPtr parse(std::string_view source);

// Recursive evaluation in binary64; throws DomainError when x leaves the
// domain of a sub-expression.
double eval(const ExprPtr& e, double x);

// Symbolic derivative d/dx. Repeated application yields higher derivatives.
// pow with a non-constant exponent differentiates through exp(b ln a) and
// so requires a positive base at evaluation time; abs differentiates to
// u'*u/|u|, undefined at u = 0 when evaluated.
ExprPtr differentiate(const ExprPtr& e);

// n-fold application of differentiate.
ExprPtr differentiate(const ExprPtr& e, int n);

// Minimal-parenthesis rendering; to_string then parse reproduces the tree.
std::string to_string(const ExprPtr& e);

// Structural equality.
bool equal(const ExprPtr& a, const ExprPtr& b);

const char* func_name(Func f);

} // namespace abelfrac
