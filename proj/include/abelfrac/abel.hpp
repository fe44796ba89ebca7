#pragma once

#include "abelfrac/expr.hpp"
#include "abelfrac/pchip.hpp"
#include "abelfrac/quad.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace abelfrac {

// First-kind Abel integral equation
//   f(x) = int_0^x g(t) (x-t)^(-alpha) dt,  0 < alpha < 1,  0 <= x <= upper,
// with unknown g. The right-hand side must satisfy f(0) = 0.
struct AbelProblem {
    ExprPtr f;
    double alpha;
    double upper;

    AbelProblem(ExprPtr f_, double alpha_, double upper_);
};

inline constexpr double kExactDefaultTol = 1e-10;

// Closed-form solution g(x) = (sin(alpha pi)/pi) int_0^x f'(t) (x-t)^(alpha-1) dt
// evaluated by singularity-removing quadrature; g(0) = 0.
// Throws ConvergenceError (carrying the partial value) if the quadrature
// budget runs out.
double solve_exact(const AbelProblem& p, double x, double tol = kExactDefaultTol);

// Product-trapezoidal approximate solution gtilde(x) on a k-cell grid of
// [0, x]:
//   gtilde(x) = h^alpha / (Gamma(1-alpha) Gamma(2+alpha)) *
//     [ ((k-1)^(1+alpha) - (k-1-alpha) k^alpha) f'(0) + f'(x)
//       + sum_{j=1}^{k-1} ((k-j+1)^(1+alpha) - 2(k-j)^(1+alpha)
//                          + (k-j-1)^(1+alpha)) f'(t_j) ]
// O(h^2) for f in C^3; gtilde(0) = 0.
double solve_approx(const AbelProblem& p, double x, int k);

// Defect of a candidate solution g in the integral equation at x:
//   int_0^x g(t) (x-t)^(-alpha) dt - f(x)
double residual(const AbelProblem& p, const std::function<double(double)>& g,
                double x, double tol = kExactDefaultTol);

// Shape-preserving interpolant through gtilde sampled at `samples`+1 evenly
// spaced points of [0, xmax], each solved with k cells. Feed to residual().
PchipInterpolant sampled_solution(const AbelProblem& p, double xmax, int k, int samples);

struct ConvergenceRow {
    int k;
    double h;
    double gtilde;
    double abs_error;
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    double exact = 0.0;
    double order = 0.0;  // least-squares slope of log(err) against log(h)
    bool at_floor = false; // some error sits at the exact-solution oracle floor
};

// Errors of solve_approx against solve_exact across a strictly increasing
// list of cell counts, with the fitted empirical order. Slopes fitted from
// errors at the quadrature-oracle floor are flagged, not rejected.
ConvergenceStudy convergence_study(const AbelProblem& p, double x,
                                   const std::vector<int>& k_list,
                                   double tol = kExactDefaultTol);

// Batch solve at several query points with one cell count; optionally
// carries the exact solution and absolute errors.
struct SolveResult {
    std::vector<double> points;
    std::vector<double> values;
    std::vector<double> h_per_point;
    int k = 0;
    std::optional<std::vector<double>> exact_values;
    std::optional<std::vector<double>> abs_errors;
};

SolveResult solve_points(const AbelProblem& p, const std::vector<double>& xs, int k,
                         bool with_exact, double tol = kExactDefaultTol);

// Least-squares slope of log(err) vs log(h); pairs with err <= 0 are clamped
// to the smallest positive double.
double fit_order(const std::vector<double>& hs, const std::vector<double>& errs);

} // namespace abelfrac
