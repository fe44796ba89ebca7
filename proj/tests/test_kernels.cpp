#include "abelfrac/reduce.hpp"

#include "abelfrac/expr.hpp"
#include "abelfrac/fracops.hpp"

#include "doctest.h"

#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace abelfrac;

TEST_CASE("chunked_sum equals serial_sum on short ranges and stays close on long ones")
{
    const auto term = [](std::int64_t i) { return std::sin(0.001 * double(i)) / (i + 1.0); };
    // below one chunk the paths are identical
    CHECK(chunked_sum(100, term) == serial_sum(100, term));
    CHECK(chunked_sum(kReduceChunk, term) == serial_sum(kReduceChunk, term));
    // beyond, only the association differs
    for (std::int64_t n : {kReduceChunk + 1, 3 * kReduceChunk, std::int64_t(250000)}) {
        const double a = chunked_sum(n, term);
        const double b = serial_sum(n, term);
        CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("chunked_sum is independent of the thread count")
{
    const auto term = [](std::int64_t i) { return std::cos(1e-4 * double(i)) * 1e-3; };
    const std::int64_t n = 300000;
    const double base = chunked_sum(n, term);
#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    for (int threads : {1, 2, 3, 7}) {
        omp_set_num_threads(threads);
        CHECK(chunked_sum(n, term) == base);
    }
    omp_set_num_threads(saved);
#else
    CHECK(chunked_sum(n, term) == base);
#endif
}

TEST_CASE("repeated kernel invocations are bit-identical")
{
    const ExprPtr f = parse("exp(x)-1");
    const double first = caputo_trap(f, FracOrder(0.5), 1.0, 50000);
    for (int rep = 0; rep < 3; ++rep)
        CHECK(caputo_trap(f, FracOrder(0.5), 1.0, 50000) == first);
}
