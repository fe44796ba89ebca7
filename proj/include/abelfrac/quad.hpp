#pragma once

#include "abelfrac/expr.hpp"

#include <functional>

namespace abelfrac {

// Result of an adaptive quadrature run. converged implies the a-posteriori
// estimate met the requested tolerance within the evaluation budget.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0; // absolute, a posteriori
    long evaluations = 0;
    bool converged = false;
};

inline constexpr double kQuadDefaultTol = 1e-10;
inline constexpr long kQuadBudget = 1000000; // integrand evaluations

// Adaptive Gauss-Kronrod 7/15 with recursive bisection on [a, b].
// Per-panel estimate |K15 - G7|, summed; max depth 60. A run that exhausts
// the evaluation budget returns its best value with converged = false.
QuadResult integrate_smooth(const std::function<double(double)>& f,
                            double a, double b, double tol = kQuadDefaultTol);

// int_0^x phi(t) (x-t)^(gamma-1) dt for 0 < gamma < 1, x > 0.
// The substitution u = (x-t)^gamma removes the endpoint singularity exactly:
// the integral becomes (1/gamma) int_0^{x^gamma} phi(x - u^(1/gamma)) du,
// which is handled by integrate_smooth.
QuadResult integrate_singular(const std::function<double(double)>& phi,
                              double gamma_exp, double x, double tol = kQuadDefaultTol);

// Expression front end for the above.
QuadResult integrate_singular(const ExprPtr& phi, double gamma_exp, double x,
                              double tol = kQuadDefaultTol);

} // namespace abelfrac
