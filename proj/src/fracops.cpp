#include "abelfrac/fracops.hpp"

#include "abelfrac/errors.hpp"
#include "abelfrac/specialfn.hpp"

#include <cmath>
#include <string>

namespace abelfrac {

FracOrder::FracOrder(double beta_) : beta(beta_), n(0)
{
    if (!(beta_ > 0.0) || !std::isfinite(beta_))
        throw InvalidArgument("FracOrder: order must be positive and finite");
    n = static_cast<int>(std::ceil(beta_));
}

Grid::Grid(double upper_, int k_) : upper(upper_), k(k_), h(upper_ / k_)
{
    if (!(upper_ > 0.0) || !std::isfinite(upper_))
        throw InvalidArgument("Grid: upper bound must be positive and finite");
    if (k_ < 1)
        throw InvalidArgument("Grid: need at least one subinterval");
}

std::vector<double> gl_weights(double alpha, int nterms)
{
    if (nterms < 0)
        throw InvalidArgument("gl_weights: nterms must be >= 0");
    std::vector<double> w(static_cast<std::size_t>(nterms) + 1);
    w[0] = 1.0;
    for (int r = 1; r <= nterms; ++r)
        w[static_cast<std::size_t>(r)] = w[static_cast<std::size_t>(r) - 1] * (r - 1 - alpha) / r;
    return w;
}

double gl_derivative(const ExprPtr& f, double alpha, double x, double h)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InvalidArgument("gl_derivative: requires 0 < alpha < 1");
    if (!(h > 0.0))
        throw InvalidArgument("gl_derivative: step must be positive");
    const double ratio = x / h;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(x - rounded * h) > 1e-12 * std::abs(x))
        throw InvalidArgument("gl_derivative: x = " + std::to_string(x)
                              + " is not an integer multiple of h = " + std::to_string(h));
    const int n = static_cast<int>(rounded);
    const std::vector<double> w = gl_weights(alpha, n);
    const double sum = chunked_sum(n + 1, [&](std::int64_t r) {
        double arg = x - static_cast<double>(r) * h;
        if (arg < 0.0)
            arg = 0.0; // r = n lands on zero up to rounding
        return w[static_cast<std::size_t>(r)] * eval(f, arg);
    });
    return sum * std::pow(h, -alpha);
}

double frac_integral_trap(const ExprPtr& f, double alpha, double b, int k)
{
    if (!(alpha > 0.0))
        throw InvalidArgument("frac_integral_trap: requires alpha > 0");
    const Grid grid(b, k);
    const double bracket = modified_trap_bracket(alpha, grid,
                                                 [&](double t) { return eval(f, t); });
    return std::pow(grid.h, alpha) / gamma_fn(alpha + 2.0) * bracket;
}

double caputo_trap(const ExprPtr& f, FracOrder order, double b, int k)
{
    const Grid grid(b, k);
    const ExprPtr fn = differentiate(f, order.n);
    const double g = order.n - order.beta;
    const double bracket = modified_trap_bracket(g, grid,
                                                 [&](double t) { return eval(fn, t); });
    return std::pow(grid.h, g) / gamma_fn(g + 2.0) * bracket;
}

namespace reference {

double frac_integral_trap(const ExprPtr& f, double alpha, double b, int k)
{
    if (!(alpha > 0.0))
        throw InvalidArgument("frac_integral_trap: requires alpha > 0");
    const Grid grid(b, k);
    const double bracket = reference::modified_trap_bracket(alpha, grid,
                                                            [&](double t) { return eval(f, t); });
    return std::pow(grid.h, alpha) / gamma_fn(alpha + 2.0) * bracket;
}

double caputo_trap(const ExprPtr& f, FracOrder order, double b, int k)
{
    const Grid grid(b, k);
    const ExprPtr fn = differentiate(f, order.n);
    const double g = order.n - order.beta;
    const double bracket = reference::modified_trap_bracket(g, grid,
                                                            [&](double t) { return eval(fn, t); });
    return std::pow(grid.h, g) / gamma_fn(g + 2.0) * bracket;
}

} // namespace reference

} // namespace abelfrac
