#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mslab/profile.hpp"

namespace mslab {

// Phi(kappa) = (4/log 2) log(n/kappa_min), the closed-form upper bound
// on the log-Sobolev constant of the multislice.
double phi_upper(const ColorProfile& profile);

// n log(n-1)/(n-2) for n >= 3, 2 for n = 2 (random walk on K_n).
double bound_complete_graph(int n);

// (log n, 4 log n) for random transposition on S_n.
std::pair<double, double> bound_random_transposition(int n);

// Two-urn Bernoulli-Laplace: upper = (2/log 2) log(n^2/(k(n-k)));
// the lower side is the same log expression up to an unspecified
// universal constant and is reported as a shape only.
struct BernoulliLaplaceBound {
    double lower_shape;  // log(n^2/(k(n-k))), universal prefactor unknown
    double upper;
};
BernoulliLaplaceBound bound_bernoulli_laplace(int k, int n);

// (2/log 2) sum_ell log(4n/kappa_ell).
double bound_fow(const ColorProfile& profile);

// (log(n/kappa_min), Phi(kappa)).
std::pair<double, double> bound_main(const ColorProfile& profile);

// Single-site chain: n/(n-2 kappa_min) log(n/kappa_min - 1);
// 2 at the symmetry point 2 kappa_min = n (continuity limit).
double bound_trivial_chain(const ColorProfile& profile);

// Two-color estimate: lhs = (1-kappa_ell/n) * BL-upper(kappa_ell, n),
// bound = (2/log 2) log(n/kappa_min); lhs <= bound always.
struct TwoColorWeight {
    double lhs;
    double bound;
};
TwoColorWeight two_color_weight(const ColorProfile& profile, int ell);

// Recursive log-Sobolev estimate evaluated with the Bernoulli-Laplace
// upper bound at the L = 2 base case.
struct RecursionStep {
    ColorProfile profile;
    double sigma1_coeff;  // (L-2) max_ell value(kappa minus ell)
    double sigma2_term;   // max_ell 2(1-kappa_ell/n) BL-upper(kappa_ell, n-kappa_ell)
    double value;         // resulting bound for this profile
};
struct RecursionTrace {
    std::vector<RecursionStep> steps;
    double final_value = 0.0;
};
RecursionTrace recursive_upper(const ColorProfile& profile);

// Small-set expansion interval for iota(kappa):
// ((log 2/4) n/log(n/kappa_min), n/log(n/kappa_min)).
std::pair<double, double> bound_iota(const ColorProfile& profile);

// Colored exclusion process interval:
// (max{2 tau_rel_g, log(n/kappa_min)}, (4/log 2) c_g log(n/kappa_min)).
std::pair<double, double> bound_colored(const ColorProfile& profile, double c_g,
                                        double tau_rel_g);

// One-sided/two-sided bound rows for reporting.
struct BoundEntry {
    std::string name;
    double lower;   // NaN when absent
    double upper;   // NaN when absent
    std::string note;
};
std::vector<BoundEntry> bounds_report(const ColorProfile& profile);

}  // namespace mslab
