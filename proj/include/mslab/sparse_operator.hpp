#pragma once

#include <cstdint>
#include <vector>

#include "mslab/graph.hpp"
#include "mslab/state_space.hpp"

namespace mslab {

// Compressed sparse symmetric Markov generator L. Off-diagonal entries are
// the nonnegative jump rates; the diagonal is implied by zero row sums and
// stored as `diag` (= row sum of off-diagonal rates, i.e. -L_ii).
struct SparseOperator {
    uint64_t dim = 0;
    std::vector<uint64_t> row_ptr;
    std::vector<uint32_t> col;
    std::vector<double> rate;
    std::vector<double> diag;

    // y = (-L) x
    void apply_neg(const double* x, double* y) const;
    std::vector<double> apply_neg(const std::vector<double>& x) const;

    // <f, -L g>_uniform = (1/dim) f' (-L) g; equals the Dirichlet form.
    double dirichlet(const std::vector<double>& f,
                     const std::vector<double>& g) const;

    double max_diag() const;
    uint64_t nnz() const { return col.size(); }

    // Connected components of the sparsity pattern (component id per state).
    std::vector<uint32_t> components() const;
};

// Generator of the kappa-colored exclusion process on G: transposition
// (i,j) fires at rate G_ij, rates aggregated over pairs producing the same
// image. With a mean-field graph this is the transposition-walk generator.
SparseOperator build_generator(const StateSpace& space, const WeightedGraph& graph);

namespace ref {
// Serial matvec kept for testing the OpenMP kernel.
void apply_neg(const SparseOperator& op, const double* x, double* y);
}

}  // namespace mslab
