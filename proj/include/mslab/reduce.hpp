#pragma once

#include <cstdint>
#include <vector>

namespace mslab {

// Deterministic parallel sum: per-block partials (fixed block size,
// independent of the thread count) combined by a fixed pairwise tree, so
// results are bit-identical across runs and thread configurations.
template <class Term>
double block_sum(uint64_t count, Term&& term) {
    constexpr uint64_t kBlock = 1024;
    const uint64_t nblocks = (count + kBlock - 1) / kBlock;
    if (nblocks <= 1) {
        double s = 0.0;
        for (uint64_t i = 0; i < count; ++i) s += term(i);
        return s;
    }
    std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static)
    for (int64_t b = 0; b < static_cast<int64_t>(nblocks); ++b) {
        const uint64_t lo = static_cast<uint64_t>(b) * kBlock;
        const uint64_t hi = lo + kBlock < count ? lo + kBlock : count;
        double s = 0.0;
        for (uint64_t i = lo; i < hi; ++i) s += term(i);
        partial[b] = s;
    }
    // pairwise tree combine
    uint64_t m = nblocks;
    while (m > 1) {
        const uint64_t half = (m + 1) / 2;
        for (uint64_t i = 0; i + half < m; ++i) partial[i] += partial[i + half];
        m = half;
    }
    return partial[0];
}

}  // namespace mslab
