// Timing comparison of the chunked (OpenMP) product-trapezoidal kernel
// against the plain serial reference, over growing grid sizes.

#include "abelfrac/expr.hpp"
#include "abelfrac/fracops.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<double(void)>& fn, double& result, int reps)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        result = fn();
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace abelfrac;

    int max_exp = 6; // grids up to 10^max_exp cells
    if (argc > 1)
        max_exp = std::atoi(argv[1]);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; chunked kernel runs serially\n");
#endif

    const ExprPtr f = parse("exp(x)-1");
    const FracOrder order(0.5);

    std::printf("%-10s %14s %14s %9s %22s\n",
                "k", "serial [ms]", "chunked [ms]", "speedup", "|serial - chunked|");
    for (int e = 4; e <= max_exp; ++e) {
        const int k = static_cast<int>(std::pow(10.0, e));
        double v_serial = 0.0, v_chunked = 0.0;
        const double ms_serial = time_ms(
            [&] { return reference::caputo_trap(f, order, 1.0, k); }, v_serial, 3);
        const double ms_chunked = time_ms(
            [&] { return caputo_trap(f, order, 1.0, k); }, v_chunked, 3);
        std::printf("%-10d %14.3f %14.3f %8.2fx %22.3e\n",
                    k, ms_serial, ms_chunked, ms_serial / ms_chunked,
                    std::abs(v_serial - v_chunked));
    }
    return 0;
}
