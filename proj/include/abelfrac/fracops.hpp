#pragma once

#include "abelfrac/expr.hpp"
#include "abelfrac/reduce.hpp"

#include <cmath>
#include <vector>

namespace abelfrac {

// Fractional order beta > 0 together with n = ceil(beta), so that
// n-1 < beta <= n (n = beta for integer beta).
struct FracOrder {
    double beta;
    int n;

    explicit FracOrder(double beta_);
};

// Uniform subdivision of [0, upper] into k cells, h = upper/k,
// nodes t_j = j*h for j = 0..k.
struct Grid {
    double upper;
    int k;
    double h;

    Grid(double upper_, int k_);
    double node(int j) const { return j == k ? upper : j * h; }
};

// Gruenwald-Letnikov weights w_r = (-1)^r binom(alpha, r), r = 0..nterms,
// by the recurrence w_0 = 1, w_r = w_{r-1} (r-1-alpha)/r.
std::vector<double> gl_weights(double alpha, int nterms);

// Gruenwald-Letnikov fractional derivative of order alpha in (0,1):
//   h^(-alpha) sum_{r=0}^{x/h} w_r f(x - r h),
// truncated where x - r h >= 0 (f taken as 0 for negative arguments).
// x must be an integer multiple of h within 1e-12*x.
double gl_derivative(const ExprPtr& f, double alpha, double x, double h);

// Weighted end/interior sum of the modified trapezoidal rule for the kernel
// exponent gamma_exp > 0 on a k-cell grid:
//   ((k-1)^(g+1) - (k-g-1) k^g) val(0) + val(k h)
//   + sum_{j=1}^{k-1} ((k-j+1)^(g+1) - 2(k-j)^(g+1) + (k-j-1)^(g+1)) val(j h)
// The interior sum runs through chunked_sum (OpenMP when long enough,
// combination order fixed).
template <class F>
double modified_trap_bracket(double gamma_exp, const Grid& grid, F&& val)
{
    const double g1 = gamma_exp + 1.0;
    const int k = grid.k;
    const double end_weight = std::pow(k - 1.0, g1)
                            - (k - gamma_exp - 1.0) * std::pow(double(k), gamma_exp);
    const double interior = chunked_sum(k - 1, [&](std::int64_t i) {
        const int j = static_cast<int>(i) + 1;
        const double c = std::pow(k - j + 1.0, g1) - 2.0 * std::pow(double(k - j), g1)
                       + std::pow(k - j - 1.0, g1);
        return c * val(grid.node(j));
    });
    return end_weight * val(0.0) + val(grid.upper) + interior;
}

// Modified trapezoidal approximation to the fractional integral of order
// alpha > 0 of f over [0, b], evaluated at b:
//   T(f, h, alpha) = h^alpha / Gamma(alpha+2) * bracket(alpha)
double frac_integral_trap(const ExprPtr& f, double alpha, double b, int k);

// Modified trapezoidal approximation to the Caputo derivative of order beta
// at b: the same bracket with exponent n - beta applied to f^(n),
//   C(f, h, beta) = h^(n-beta) / Gamma(n+2-beta) * bracket(n-beta, f^(n))
// where f^(n) is obtained symbolically.
double caputo_trap(const ExprPtr& f, FracOrder order, double b, int k);

// Serial reference implementations: plain left-to-right sums, no chunking.
// Kept for cross-checking the parallel kernels and for benchmarking.
namespace reference {

template <class F>
double modified_trap_bracket(double gamma_exp, const Grid& grid, F&& val)
{
    const double g1 = gamma_exp + 1.0;
    const int k = grid.k;
    double s = (std::pow(k - 1.0, g1)
                - (k - gamma_exp - 1.0) * std::pow(double(k), gamma_exp)) * val(0.0)
             + val(grid.upper);
    for (int j = 1; j <= k - 1; ++j) {
        const double c = std::pow(k - j + 1.0, g1) - 2.0 * std::pow(double(k - j), g1)
                       + std::pow(k - j - 1.0, g1);
        s += c * val(grid.node(j));
    }
    return s;
}

double frac_integral_trap(const ExprPtr& f, double alpha, double b, int k);
double caputo_trap(const ExprPtr& f, FracOrder order, double b, int k);

} // namespace reference

} // namespace abelfrac
