#pragma once

#include "mslab/graph.hpp"
#include "mslab/observable.hpp"

namespace mslab {

double expectation(const Observable& f);
double variance(const Observable& f);

// t log t - t + 1 >= 0 (0 at t = 1); evaluated by series near t = 1 so
// near-constant entropies do not cancel catastrophically.
double entropy_kernel(double t);

// Ent(f) = E[f log f] - E[f] log E[f], natural log, 0 log 0 = 0.
// Values in [-1e-14, 0) are clamped to zero; true negatives throw.
double entropy(const Observable& f);

// (1/2) sum_{i<j} G_ij E[(grad_ij f)(grad_ij g)].
double dirichlet_form(const Observable& f, const Observable& g,
                      const WeightedGraph& graph);

// (E[Ent(f | xi_ell)], Ent(E[f | xi_ell])); the two add up to Ent(f).
struct Decomposition {
    double local;
    double projected;
};
Decomposition conditional_decomposition(const Observable& f, int color);

// E[f | xi_ell] as a function of the state (constant on each fiber).
Observable conditional_expectation(const Observable& f, int color);

// sigma1 = sum_ell (1 - kappa_ell/n) E[Ent(f|xi_ell)],
// sigma2 = sum_ell (1 - kappa_ell/n) Ent(E[f|xi_ell]);
// sigma1 + sigma2 = (L-1) Ent(f).
struct EntropySplit {
    double sigma1;
    double sigma2;
};
EntropySplit weighted_entropy_split(const Observable& f);

// Group id of each state: the combinatorial-number-system rank of its
// kappa_ell-subset xi_ell. Groups all have equal size.
std::vector<uint32_t> color_group_index(const StateSpace& space, int color);

namespace ref {
// Serial reference implementations, kept for testing the parallel kernels.
double expectation(const Observable& f);
double entropy(const Observable& f);
double dirichlet_form(const Observable& f, const Observable& g,
                      const WeightedGraph& graph);
}  // namespace ref

}  // namespace mslab
