#pragma once

#include <cstdint>
#include <vector>

#include "mslab/state_space.hpp"

namespace mslab {

// Packed subset of state ranks.
struct SubsetMask {
    std::vector<uint64_t> bits;
    uint64_t popcount = 0;

    static SubsetMask empty(uint64_t nstates);
    bool test(uint64_t i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
    void set(uint64_t i);
};

// Schreier-graph adjacency of Omega_kappa: neighbors differ at exactly two
// coordinates. Materialized once per space as sorted neighbor lists.
struct Adjacency {
    std::vector<std::vector<uint32_t>> nbr;
    uint64_t edge_count = 0;
};
Adjacency build_adjacency(const StateSpace& space);

// Exact edge-boundary count |dA|.
uint64_t edge_boundary(const Adjacency& adj, const SubsetMask& a);
uint64_t edge_boundary(const StateSpace& space, const SubsetMask& a);

// Brute-force iota(kappa) = min over nonempty proper A of
// (|dA|/|A|) / log(|Omega|/|A|); Gray-code sweep over all subsets.
inline constexpr uint64_t kIotaSweepCap = 24;

struct IotaResult {
    double iota = 0.0;
    SubsetMask argmin;
};
IotaResult brute_force_iota(const StateSpace& space);

// Upper bounds on iota from the extremal set {xi_ell = [kappa_min]}:
// sharp = kappa_min(n-kappa_min)/log C(n, kappa_min), loose = n/log(n/kappa_min).
struct CandidateBound {
    double sharp;
    double loose;
};
CandidateBound candidate_bound(const ColorProfile& profile);

// For even-split profiles (floor(n/2), ceil(n/2)): n/candidate vs
// 4 log(n/kappa_min), showing the upper-bound prefactor is tight up to log 2.
struct SharpnessRow {
    int n;
    double n_over_candidate;
    double four_log;
};
std::vector<SharpnessRow> sharpness_curve(int n_max);

}  // namespace mslab
