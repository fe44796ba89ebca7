#include "abelfrac/specialfn.hpp"

#include "abelfrac/errors.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

using namespace abelfrac;

namespace {

// independent erf oracle: the non-alternating scaled series
//   erf(x) = (2/sqrt(pi)) e^(-x^2) sum_n 2^n x^(2n+1) / (1*3*5*...*(2n+1))
// (no cancellation, different shape from the implementation's series)
double erf_oracle(double x)
{
    const double ax = std::abs(x);
    double term = ax;
    double sum = ax;
    for (int n = 1; n < 400; ++n) {
        term *= 2.0 * ax * ax / (2.0 * n + 1.0);
        sum += term;
        if (term <= 1e-18 * sum)
            break;
    }
    const double v = 2.0 / std::sqrt(std::numbers::pi) * std::exp(-ax * ax) * sum;
    return x < 0.0 ? -v : v;
}

} // namespace

TEST_CASE("gamma at integer and half-integer anchors")
{
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    // Gamma(2.5) = 1.5 * 0.5 * sqrt(pi)
    CHECK(gamma_fn(2.5) == doctest::Approx(0.75 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK(gamma_fn(2.5) == doctest::Approx(1.3293403881791370).epsilon(1e-14));
}

TEST_CASE("gamma poles and overflow are rejected")
{
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-1.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-7.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(172.0), DomainError);
    CHECK(std::isfinite(gamma_fn(170.0)));
}

TEST_CASE("gamma recurrence x Gamma(x) = Gamma(x+1)")
{
    std::mt19937 rng(20240801);
    std::uniform_real_distribution<double> dist(0.5, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = dist(rng);
        const double lhs = x * gamma_fn(x);
        const double rhs = gamma_fn(x + 1.0);
        CHECK(std::abs(lhs - rhs) / rhs <= 1e-12);
    }
}

TEST_CASE("gamma reflection Gamma(x) Gamma(1-x) = pi / sin(pi x)")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.001, 0.999);
    for (int i = 0; i < 1000; ++i) {
        const double x = dist(rng);
        const double lhs = gamma_fn(x) * gamma_fn(1.0 - x);
        const double rhs = std::numbers::pi / std::sin(std::numbers::pi * x);
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) <= 1e-11);
    }
}

TEST_CASE("sin(a pi) Gamma(a) Gamma(1-a) equals pi across a = 0.1..0.9")
{
    for (int i = 1; i <= 9; ++i) {
        const double a = i / 10.0;
        const double v = std::sin(a * std::numbers::pi) * gamma_fn(a) * gamma_fn(1.0 - a);
        CHECK(std::abs(v - std::numbers::pi) / std::numbers::pi <= 1e-12);
    }
}

TEST_CASE("gamma against high-precision reference points")
{
    // reference values correct to 17 significant digits
    struct Ref { double x, gamma; };
    const Ref refs[] = {
        {0.1, 9.5135076986687318},
        {0.25, 3.6256099082219083},
        {1.4616321449683623, 0.8856031944108887}, // minimum of gamma
        {10.0, 362880.0},
        {34.5, 5.0446208683494513e37},
        {97.25, 3.1091629306851973e150},
        {170.0, 4.2690680090047053e304},
    };
    for (const Ref& r : refs)
        CHECK(std::abs(gamma_fn(r.x) - r.gamma) / r.gamma <= 1e-13);
}

TEST_CASE("log_gamma matches log of gamma where both are safe")
{
    for (double x : {0.1, 0.7, 1.0, 2.5, 10.0, 56.25, 170.0, 500.0}) {
        if (x <= 170.0)
            CHECK(log_gamma(x) == doctest::Approx(std::log(gamma_fn(x))).epsilon(1e-12));
        else
            CHECK(std::isfinite(log_gamma(x)));
    }
}

TEST_CASE("erf anchors and oddness")
{
    CHECK(erf_fn(0.0) == 0.0);
    CHECK(erf_fn(1.0) == doctest::Approx(0.8427007929497149).epsilon(1e-15));
    CHECK(erf_fn(-1.0) == doctest::Approx(-0.8427007929497149).epsilon(1e-15));
    CHECK(erf_fn(6.5) == 1.0);
    CHECK(erf_fn(-7.0) == -1.0);
}

TEST_CASE("erf against the scaled-series oracle")
{
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-6.0, 6.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = dist(rng);
        CHECK(std::abs(erf_fn(x) - erf_oracle(x)) <= 1e-13);
    }
}

TEST_CASE("erf is odd and monotone on a fine grid")
{
    double prev = erf_fn(-8.0);
    for (int i = 1; i <= 1000; ++i) {
        const double x = -8.0 + 16.0 * i / 1000.0;
        const double v = erf_fn(x);
        CHECK(v >= prev);
        CHECK(erf_fn(-x) == -v);
        prev = v;
    }
}
