#pragma once

namespace abelfrac {

// Gamma function for real arguments.
// Lanczos approximation (g = 607/128, 15 coefficients) with the reflection
// formula for x < 0.5. Relative error below 1e-14 on [0.1, 170].
// Throws DomainError at the poles x = 0, -1, -2, ... and on overflow
// (x > 171.62, where the result exceeds the double range).
double gamma_fn(double x);

// Natural log of |Gamma(x)| for x > 0.
double log_gamma(double x);

// Error function erf(x) = (2/sqrt(pi)) * int_0^x exp(-t^2) dt.
// Maclaurin series for |x| <= 2, Lentz continued fraction for the
// complementary function for |x| > 2, saturation to +-1 for |x| > 6.
// Absolute error below 1e-14; total on finite inputs.
double erf_fn(double x);

} // namespace abelfrac
