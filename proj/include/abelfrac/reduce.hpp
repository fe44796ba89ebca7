#pragma once

#include <cstdint>
#include <vector>

namespace abelfrac {

// Fixed chunk width for the deterministic reduction. Results depend on this
// constant, never on the number of threads, so a binary produces identical
// bits with OpenMP enabled, disabled, or throttled.
inline constexpr std::int64_t kReduceChunk = 4096;

// Plain left-to-right accumulation. Serial reference for chunked_sum; also
// the fast path for short sums.
template <class Term>
double serial_sum(std::int64_t n, Term&& term)
{
    double s = 0.0;
    for (std::int64_t i = 0; i < n; ++i)
        s += term(i);
    return s;
}

// sum_{i=0}^{n-1} term(i) with a fixed association order: each kReduceChunk
// block is accumulated left to right, block totals are combined left to
// right. Blocks are independent, so they run under OpenMP when the sum is
// long enough; the combination order stays fixed either way.
template <class Term>
double chunked_sum(std::int64_t n, Term&& term)
{
    if (n <= kReduceChunk)
        return serial_sum(n, term);

    const std::int64_t nchunks = (n + kReduceChunk - 1) / kReduceChunk;
    std::vector<double> partial(static_cast<std::size_t>(nchunks), 0.0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t lo = c * kReduceChunk;
        const std::int64_t hi = lo + kReduceChunk < n ? lo + kReduceChunk : n;
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i)
            s += term(i);
        partial[static_cast<std::size_t>(c)] = s;
    }

    double total = 0.0;
    for (double p : partial)
        total += p;
    return total;
}

} // namespace abelfrac
