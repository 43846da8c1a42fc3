#include "mslab/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mslab/errors.hpp"

namespace mslab {

SubsetMask SubsetMask::empty(uint64_t nstates) {
    SubsetMask m;
    m.bits.assign((nstates + 63) / 64, 0);
    return m;
}

void SubsetMask::set(uint64_t i) {
    if (!test(i)) {
        bits[i >> 6] |= 1ull << (i & 63);
        ++popcount;
    }
}

Adjacency build_adjacency(const StateSpace& space) {
    const int n = space.n();
    Adjacency adj;
    adj.nbr.resize(space.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (int64_t idx = 0; idx < static_cast<int64_t>(space.size()); ++idx) {
        const Word w = space.unrank(static_cast<uint64_t>(idx));
        auto& row = adj.nbr[idx];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (w[i] == w[j]) continue;
                Word w2 = w;
                std::swap(w2[i], w2[j]);
                row.push_back(static_cast<uint32_t>(space.rank(w2)));
            }
        std::sort(row.begin(), row.end());
    }
    uint64_t deg_sum = 0;
    for (const auto& row : adj.nbr) deg_sum += row.size();
    adj.edge_count = deg_sum / 2;
    return adj;
}

uint64_t edge_boundary(const Adjacency& adj, const SubsetMask& a) {
    uint64_t cut = 0;
    for (uint64_t s = 0; s < adj.nbr.size(); ++s) {
        if (!a.test(s)) continue;
        for (uint32_t t : adj.nbr[s])
            if (!a.test(t)) ++cut;
    }
    return cut;
}

uint64_t edge_boundary(const StateSpace& space, const SubsetMask& a) {
    return edge_boundary(build_adjacency(space), a);
}

IotaResult brute_force_iota(const StateSpace& space) {
    const uint64_t N = space.size();
    if (N > kIotaSweepCap)
        throw CapError("brute-force iota sweeps 2^|Omega| subsets and is capped at " +
                       std::to_string(kIotaSweepCap) +
                       " states (got " + std::to_string(N) +
                       "); use candidate_bound instead");
    const Adjacency adj = build_adjacency(space);

    // Gray-code sweep: consecutive masks differ by one flipped state, so
    // the boundary count updates from that state's degree split.
    const uint64_t total = 1ull << N;
    uint64_t cur = 0;  // current mask (plain bits; N <= 24)
    uint64_t boundary = 0;
    int size = 0;
    double best = std::numeric_limits<double>::infinity();
    uint64_t best_mask = 0;
    const double logN = std::log(static_cast<double>(N));
    for (uint64_t g = 1; g < total; ++g) {
        const uint64_t gray = g ^ (g >> 1);
        const uint64_t prev = (g - 1) ^ ((g - 1) >> 1);
        const int s = __builtin_ctzll(gray ^ prev);
        int inside = 0;
        for (uint32_t t : adj.nbr[s])
            if (cur & (1ull << t)) ++inside;
        const int deg = static_cast<int>(adj.nbr[s].size());
        if (cur & (1ull << s)) {  // removing s
            cur &= ~(1ull << s);
            --size;
            boundary -= deg - 2 * inside;
        } else {  // adding s
            cur |= 1ull << s;
            ++size;
            boundary += deg - 2 * inside;
        }
        if (size == 0 || size == static_cast<int>(N)) continue;  // improper
        const double ratio = (static_cast<double>(boundary) / size) /
                             (logN - std::log(static_cast<double>(size)));
        if (ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && cur < best_mask)) {
            best = ratio;
            best_mask = cur;
        }
    }
    IotaResult out;
    out.iota = best;
    out.argmin = SubsetMask::empty(N);
    for (uint64_t i = 0; i < N; ++i)
        if (best_mask & (1ull << i)) out.argmin.set(i);
    return out;
}

CandidateBound candidate_bound(const ColorProfile& profile) {
    if (profile.l() < 2)
        throw DegenerateSpaceError("candidate bound needs at least 2 colors");
    const double n = profile.n();
    const double k = profile.kappa_min();
    const double log_binom =
        std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
    return {k * (n - k) / log_binom, n / std::log(n / k)};
}

std::vector<SharpnessRow> sharpness_curve(int n_max) {
    if (n_max < 4) throw ConfigError("sharpness curve needs n_max >= 4");
    std::vector<SharpnessRow> rows;
    for (int n = 4; n <= n_max; ++n) {
        const ColorProfile p({n / 2, n - n / 2});
        const CandidateBound cb = candidate_bound(p);
        rows.push_back({n, n / cb.sharp,
                        4.0 * std::log(static_cast<double>(n) / p.kappa_min())});
    }
    return rows;
}

}  // namespace mslab
