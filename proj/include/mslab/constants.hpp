#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mslab/graph.hpp"
#include "mslab/sparse_operator.hpp"
#include "mslab/state_space.hpp"

namespace mslab {

enum class EstimateKind { exact_spectral, variational_lower_bound };

const char* estimate_kind_name(EstimateKind k);

struct ConstantEstimate {
    double value = 0.0;
    EstimateKind kind = EstimateKind::exact_spectral;
    std::vector<double> witness;  // empty if none
    int restarts_used = 0;
    int iterations = 0;
    double residual = 0.0;
    // Best ratio obtained from the extremal-indicator seeds alone
    // (variational estimates only; NaN otherwise).
    double indicator_seed_value = 0.0;
};

// --- spectral ---------------------------------------------------------

// tau_rel = 1/gap, gap the smallest nonzero eigenvalue of -L. Dense solve
// below kDenseSpectralLimit states, deflated Lanczos above. Throws on a
// reducible operator, naming a disconnected-component witness.
inline constexpr uint64_t kDenseSpectralLimit = 2000;

ConstantEstimate poincare_constant(const SparseOperator& op);

// Spectral gap together with a gap eigenvector (used as optimizer seed).
struct GapResult {
    double gap = 0.0;
    std::vector<double> eigenvector;
    int iterations = 0;
    double residual = 0.0;
};
GapResult spectral_gap(const SparseOperator& op);

// --- variational ------------------------------------------------------

struct Budget {
    int random_restarts = 64;
    int max_iterations = 5000;
    int patience = 50;          // iterations without improvement
    double improve_tol = 1e-11;
    uint64_t seed = 12345;
};

// Certified lower bound on tau_ls: maximizes Ent(f)/E(sqrt f, sqrt f) by
// multi-restart projected gradient ascent in g = sqrt(f), E[g^2] = 1.
ConstantEstimate lsc_estimate(const StateSpace& space, const WeightedGraph& graph,
                              const Budget& budget = {});

// Certified lower bound on tau_mls: maximizes Ent(f)/E(f, log f) over
// strictly positive f with the same restart scheme.
ConstantEstimate mlsc_estimate(const StateSpace& space, const WeightedGraph& graph,
                               const Budget& budget = {});

// Ratio Ent(1_A)/E(sqrt 1_A, sqrt 1_A) for the extremal set
// A = {xi_ell = first kappa_min positions}, evaluated directly.
double extremal_indicator_ratio(const StateSpace& space, const WeightedGraph& graph);

// --- comparison -------------------------------------------------------

// Smallest c with E^G(f,f) <= c E_mf(f,f) on Omega_(1,...,1): largest
// generalized eigenvalue of the Dirichlet kernel pencil restricted to the
// complement of the constants. Requires n <= 7 and G connected.
double comparison_constant(const WeightedGraph& graph, int n);

}  // namespace mslab
