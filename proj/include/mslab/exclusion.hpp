#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mslab/graph.hpp"
#include "mslab/sparse_operator.hpp"
#include "mslab/state_space.hpp"

namespace mslab {

// Generator of the kappa-colored exclusion process; alias of the shared
// builder (kappa = (1, n-1) gives the simple random walk on G,
// kappa = (1,...,1) the interchange process).
SparseOperator exclusion_generator(const StateSpace& space, const WeightedGraph& graph);

enum class StartPolicy { fixed, worst, transitive };

struct MixingCurve {
    std::vector<double> times;
    std::vector<double> tv;
    std::string policy;
};

// Exact worst-case (or fixed-start) total-variation distance to uniform at
// the given times, via uniformization of exp(tL) with certified truncation
// (Poisson tail < 1e-13).
MixingCurve tv_decay_exact(const SparseOperator& op, StartPolicy policy,
                           uint64_t start, const std::vector<double>& times);

// Geometric default grid, 64 points spanning [0.01, 20]/gap (with t = 0
// prepended); pass gap_hint <= 0 for the unit-rate fallback [0.01, 100].
std::vector<double> default_time_grid(double gap_hint);

// First time with TV <= eps, linearly interpolated between grid points.
double mixing_time(const MixingCurve& curve, double eps);

struct TrajectorySample {
    uint64_t seed = 0;
    Word start;
    std::vector<double> jump_times;
    std::vector<std::pair<int, int>> swaps;  // 1-based sites
    // visited state ranks, filled only when the space fits the cap
    std::vector<uint64_t> visited_ranks;
};

// Event-driven continuous-time simulation on implicit dynamics (no state
// enumeration); pairs fire at rate G_ij, no-op swaps thinned out.
TrajectorySample simulate_trajectory(const ColorProfile& profile,
                                     const WeightedGraph& graph, const Word& start,
                                     double horizon, uint64_t seed);

void store_mixing_curve_csv(const MixingCurve& curve, const std::string& path);
void store_trajectory_csv(const TrajectorySample& t, const std::string& path);

}  // namespace mslab
