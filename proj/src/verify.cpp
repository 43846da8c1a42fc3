#include "mslab/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "mslab/bounds.hpp"
#include "mslab/constants.hpp"
#include "mslab/errors.hpp"
#include "mslab/exclusion.hpp"
#include "mslab/functionals.hpp"
#include "mslab/isoperimetry.hpp"

namespace mslab {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

Observable random_observable(const StateSpace& sp, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.1, 1.1);
    std::vector<double> v(sp.size());
    for (double& x : v) x = uni(rng);
    return Observable(sp, std::move(v));
}

struct Failures {
    int count = 0;
    std::string first;
    void add(const std::string& msg) {
        if (count == 0) first = msg;
        ++count;
    }
};

// Distinct partitions (canonical profiles), n in [n_lo, n_hi], filtered by
// state-space size.
std::vector<ColorProfile> partition_family(int n_lo, int n_hi, uint64_t max_states) {
    std::vector<ColorProfile> out;
    for (int n = n_lo; n <= n_hi; ++n)
        for (const ColorProfile& p : all_partitions(n)) {
            try {
                if (multinomial_size(p) <= max_states) out.push_back(p);
            } catch (const OverflowError&) {
                // past 64 bits is certainly past any cap here
            }
        }
    return out;
}

// --- criterion 1 ------------------------------------------------------

CheckResult check_spectral_insensitivity(uint64_t) {
    CheckResult res{"spectral-insensitivity"};
    Failures fail;
    std::map<std::vector<int>, double> cache;
    int spaces = 0;
    for (int n = 2; n <= 8; ++n) {
        for (const ColorProfile& comp : all_compositions(n)) {
            const ColorProfile p = comp.canonical();
            auto it = cache.find(p.counts);
            double tau;
            if (it != cache.end()) {
                tau = it->second;
            } else {
                StateSpace sp(p);
                tau = poincare_constant(
                          build_generator(sp, WeightedGraph::mean_field(n)))
                          .value;
                cache.emplace(p.counts, tau);
                ++spaces;
            }
            if (std::abs(tau - 1.0) > 1e-9)
                fail.add("profile " + comp.to_string() + ": tau_rel = " + fmt(tau));
        }
    }
    res.pass = fail.count == 0;
    res.detail = res.pass
                     ? "tau_rel = 1 within 1e-9 on all compositions of n <= 8 (" +
                           std::to_string(spaces) + " distinct spaces)"
                     : std::to_string(fail.count) + " failures; first: " + fail.first;
    return res;
}

// --- criterion 2 ------------------------------------------------------

CheckResult check_exact_constants(uint64_t seed) {
    CheckResult res{"exact-constants"};
    Budget budget;
    budget.random_restarts = 32;
    budget.max_iterations = 20000;
    budget.patience = 400;
    budget.seed = seed;
    Failures fail;
    struct Case {
        std::vector<int> counts;
        double target;
    };
    for (const Case& c : {Case{{1, 1}, 2.0}, Case{{1, 2}, 3.0 * std::log(2.0)}}) {
        StateSpace sp{ColorProfile(c.counts)};
        const ConstantEstimate est =
            lsc_estimate(sp, WeightedGraph::mean_field(sp.n()), budget);
        if (est.value < c.target - 1e-3 || est.value > c.target + 1e-9)
            fail.add("profile " + sp.profile().to_string() + ": lsc = " +
                     fmt(est.value) + ", target " + fmt(c.target));
        if (est.residual > 1e-9 * std::max(1.0, est.value))
            fail.add("witness certification residual " + fmt(est.residual));
    }
    res.pass = fail.count == 0;
    res.detail = res.pass ? "lsc(1,1) ~ 2 and lsc(1,2) ~ 3 log 2, within 1e-3, "
                            "certified witnesses"
                          : fail.first;
    return res;
}

// --- criterion 3 ------------------------------------------------------

CheckResult check_main_sandwich(uint64_t seed) {
    CheckResult res{"main-sandwich"};
    Failures fail;
    const auto profiles = partition_family(2, 12, 5000);
    int done = 0;
    for (const ColorProfile& p : profiles) {
        StateSpace sp(p);
        Budget budget;
        budget.seed = seed;
        budget.random_restarts = sp.size() > 500 ? 4 : 12;
        budget.max_iterations = sp.size() > 500 ? 250 : 2000;
        budget.patience = 40;
        const ConstantEstimate est =
            lsc_estimate(sp, WeightedGraph::mean_field(p.n()), budget);
        const auto [lo, hi] = bound_main(p);
        if (est.value < lo - 1e-6 || est.value > hi + 1e-9)
            fail.add("profile " + p.to_string() + ": lsc lb " + fmt(est.value) +
                     " outside [" + fmt(lo) + ", " + fmt(hi) + "]");
        if (est.indicator_seed_value < lo - 1e-6)
            fail.add("profile " + p.to_string() + ": indicator seed " +
                     fmt(est.indicator_seed_value) + " < " + fmt(lo));
        ++done;
    }
    res.pass = fail.count == 0;
    res.detail = res.pass ? "lsc lower bounds inside the main interval on " +
                                std::to_string(done) + " profiles (|Omega| <= 5000)"
                          : std::to_string(fail.count) + " failures; first: " + fail.first;
    return res;
}

// --- criterion 4 ------------------------------------------------------

CheckResult check_mls_interval(uint64_t seed) {
    CheckResult res{"mls-interval"};
    Failures fail;
    const auto profiles = partition_family(2, 10, 2000);
    for (const ColorProfile& p : profiles) {
        StateSpace sp(p);
        Budget budget;
        budget.seed = seed;
        budget.random_restarts = sp.size() > 300 ? 4 : 12;
        budget.max_iterations = sp.size() > 300 ? 250 : 1500;
        budget.patience = 40;
        const ConstantEstimate est =
            mlsc_estimate(sp, WeightedGraph::mean_field(p.n()), budget);
        if (est.value < 0.5 - 1e-3 || est.value > 2.0 + 1e-9)
            fail.add("profile " + p.to_string() + ": mlsc estimate " +
                     fmt(est.value) + " outside [1/2, 2]");
    }
    res.pass = fail.count == 0;
    res.detail = res.pass ? "mlsc estimates in [1/2 - 1e-3, 2 + 1e-9] on " +
                                std::to_string(profiles.size()) + " profiles"
                          : std::to_string(fail.count) + " failures; first: " + fail.first;
    return res;
}

// --- criterion 5 ------------------------------------------------------

CheckResult check_chain_rule(uint64_t seed) {
    CheckResult res{"chain-rule"};
    Failures fail;
    const std::vector<std::vector<int>> profiles = {
        {2, 1}, {1, 1, 1}, {2, 2}, {2, 1, 1}, {1, 3}, {1, 2, 2}};
    std::mt19937_64 rng(seed);
    for (const auto& counts : profiles) {
        StateSpace sp{ColorProfile(counts)};
        const ColorProfile& p = sp.profile();
        const WeightedGraph mf = WeightedGraph::mean_field(p.n());
        const int L = p.l();
        // majorants for (pr:first)/(pr:second) from the closed-form bounds
        double maj1 = 0.0;
        if (L >= 3) {
            double mx = 0.0;
            for (int ell = 1; ell <= L; ++ell)
                mx = std::max(mx, phi_upper(p.removed(ell)));
            maj1 = (L - 2) * mx;
        }
        double maj2 = 0.0;
        for (int ell = 1; ell <= L; ++ell)
            maj2 = std::max(maj2,
                            2.0 * (1.0 - double(p.counts[ell - 1]) / p.n()) *
                                bound_bernoulli_laplace(p.counts[ell - 1], p.n()).upper);
        for (int trial = 0; trial < 100; ++trial) {
            const Observable f = random_observable(sp, rng);
            const double ent = entropy(f);
            for (int ell = 1; ell <= L; ++ell) {
                const Decomposition d = conditional_decomposition(f, ell);
                if (std::abs(d.local + d.projected - ent) > 1e-10 * std::max(1.0, ent))
                    fail.add("profile " + p.to_string() + " color " +
                             std::to_string(ell) + ": chain rule off by " +
                             fmt(d.local + d.projected - ent));
            }
            const EntropySplit s = weighted_entropy_split(f);
            if (std::abs(s.sigma1 + s.sigma2 - (L - 1) * ent) >
                1e-10 * std::max(1.0, ent))
                fail.add("profile " + p.to_string() + ": weighted split off by " +
                         fmt(s.sigma1 + s.sigma2 - (L - 1) * ent));
            std::vector<double> sq(f.values.size());
            for (size_t i = 0; i < sq.size(); ++i) sq[i] = std::sqrt(f[i]);
            const Observable sf(sp, std::move(sq));
            const double dir = dirichlet_form(sf, sf, mf);
            if (maj1 * dir - s.sigma1 < -1e-9)
                fail.add("profile " + p.to_string() + ": sigma1 inequality slack " +
                         fmt(maj1 * dir - s.sigma1));
            if (maj2 * dir - s.sigma2 < -1e-9)
                fail.add("profile " + p.to_string() + ": sigma2 inequality slack " +
                         fmt(maj2 * dir - s.sigma2));
        }
    }
    res.pass = fail.count == 0;
    res.detail = res.pass ? "chain rule, weighted split and both recursion "
                            "inequalities hold on 100 random observables per profile"
                          : std::to_string(fail.count) + " failures; first: " + fail.first;
    return res;
}

// --- criterion 6 ------------------------------------------------------

CheckResult check_coarsening(uint64_t seed) {
    CheckResult res{"coarsening"};
    Failures fail;
    std::mt19937_64 rng(seed);
    for (int n = 2; n <= 5; ++n) {
        StateSpace fine{ColorProfile(std::vector<int>(n, 1))};
        std::vector<WeightedGraph> graphs{WeightedGraph::mean_field(n)};
        if (n >= 3) graphs.push_back(WeightedGraph::cycle(n));
        for (const ColorProfile& p : all_partitions(n)) {
            StateSpace sp(p);
            const Observable f = random_observable(sp, rng);
            const Observable g = random_observable(sp, rng);
            // pull both back through Psi
            std::vector<double> fv(fine.size()), gv(fine.size());
            for (uint64_t i = 0; i < fine.size(); ++i) {
                const uint64_t j = sp.rank(coarsen_word(p, fine.unrank(i)));
                fv[i] = f[j];
                gv[i] = g[j];
            }
            const Observable fpsi(fine, std::move(fv)), gpsi(fine, std::move(gv));
            if (std::abs(expectation(f) - expectation(fpsi)) > 1e-12)
                fail.add("profile " + p.to_string() + ": expectation transfer off");
            for (const WeightedGraph& gr : graphs) {
                const double a = dirichlet_form(f, g, gr);
                const double b = dirichlet_form(fpsi, gpsi, gr);
                if (std::abs(a - b) > 1e-12)
                    fail.add("profile " + p.to_string() + " on " +
                             graph_kind_name(gr.kind) +
                             ": Dirichlet transfer off by " + fmt(a - b));
            }
        }
    }
    res.pass = fail.count == 0;
    res.detail = res.pass ? "expectation and Dirichlet-form transfer exact to "
                            "1e-12 for all kappa with n <= 5"
                          : std::to_string(fail.count) + " failures; first: " + fail.first;
    return res;
}

// --- criterion 7 ------------------------------------------------------

CheckResult check_isoperimetry(uint64_t seed) {
    CheckResult res{"isoperimetry"};
    Failures fail;
    std::mt19937_64 rng(seed);
    const auto profiles = partition_family(2, 24, kIotaSweepCap);
    int swept = 0;
    for (const ColorProfile& p : profiles) {
        StateSpace sp(p);
        const uint64_t N = sp.size();
        const WeightedGraph mf = WeightedGraph::mean_field(p.n());
        const Adjacency adj = build_adjacency(sp);
        // Lemma lm:vs identities on random subsets
        std::uniform_int_distribution<uint64_t> pick(0, N - 1);
        for (int trial = 0; trial < 200; ++trial) {
            SubsetMask mask = SubsetMask::empty(N);
            const uint64_t target = 1 + pick(rng) % (N - 1);
            while (mask.popcount < target) mask.set(pick(rng));
            const uint64_t boundary = edge_boundary(adj, mask);
            std::vector<double> ind(N, 0.0);
            for (uint64_t i = 0; i < N; ++i)
                if (mask.test(i)) ind[i] = 1.0;
            const Observable fa(sp, std::move(ind));
            const double dir = dirichlet_form(fa, fa, mf);
            if (std::abs(p.n() * double(N) * dir - double(boundary)) > 1e-6)
                fail.add("profile " + p.to_string() + ": |dA| != n|Omega|E(1_A,1_A)");
            const double ent = entropy(fa);
            const double closed = double(mask.popcount) / N *
                                  std::log(double(N) / mask.popcount);
            if (std::abs(ent - closed) > 1e-12 * std::max(1.0, closed))
                fail.add("profile " + p.to_string() + ": Ent(1_A) identity off");
        }
        const IotaResult iota = brute_force_iota(sp);
        const CandidateBound cb = candidate_bound(p);
        const double lower = p.n() / phi_upper(p);
        if (iota.iota < lower - 1e-6)
            fail.add("profile " + p.to_string() + ": iota " + fmt(iota.iota) +
                     " < n/Phi " + fmt(lower));
        if (iota.iota > cb.sharp + 1e-9)
            fail.add("profile " + p.to_string() + ": iota " + fmt(iota.iota) +
                     " > candidate " + fmt(cb.sharp));
        ++swept;
    }
    res.pass = fail.count == 0;
    res.detail = res.pass ? "n/Phi <= iota <= candidate bound and Lemma "
                            "identities on " + std::to_string(swept) +
                            " tiny profiles (|Omega| <= 24)"
                          : std::to_string(fail.count) + " failures; first: " + fail.first;
    return res;
}

// --- criterion 8 ------------------------------------------------------

CheckResult check_recursion(uint64_t seed) {
    CheckResult res{"recursion"};
    Failures fail;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uniform_int_distribution<int> pickL(2, 10);
        const int L = pickL(rng);
        std::uniform_int_distribution<int> pickN(L, 50);
        const int n = pickN(rng);
        // random composition of n into L positive parts
        std::vector<int> parts(L, 1);
        std::uniform_int_distribution<int> pickPart(0, L - 1);
        for (int extra = 0; extra < n - L; ++extra) ++parts[pickPart(rng)];
        const ColorProfile p(parts);
        const RecursionTrace tr = recursive_upper(p);
        if (tr.final_value > phi_upper(p) + 1e-12)
            fail.add("profile " + p.to_string() + ": recursion " +
                     fmt(tr.final_value) + " > Phi " + fmt(phi_upper(p)));
    }
    // Lemma lm:L2 scalar inequality on a grid of [0, 1/2]
    for (int i = 0; i <= 10000; ++i) {
        const double t = 0.5 * i / 10000.0;
        const double lhs = (t > 0 ? t * std::log(t) : 0.0) -
                           (1.0 - t) * std::log(1.0 - t);
        if (lhs > 1e-15)
            fail.add("t-inequality violated at t = " + fmt(t));
    }
    res.pass = fail.count == 0;
    res.detail = res.pass ? "recursion closes below Phi on 1000 random profiles; "
                            "t-inequality holds on the 10001-point grid"
                          : std::to_string(fail.count) + " failures; first: " + fail.first;
    return res;
}

// --- criterion 9 ------------------------------------------------------

CheckResult check_aldous(uint64_t) {
    CheckResult res{"aldous"};
    Failures fail;
    const std::vector<std::vector<int>> kappas = {
        {1, 4}, {2, 3}, {1, 2, 2}, {1, 1, 1, 1, 1}};
    for (const WeightedGraph& g :
         {WeightedGraph::cycle(5), WeightedGraph::complete_srw(5)}) {
        double ref = 0.0;
        bool first = true;
        for (const auto& counts : kappas) {
            StateSpace sp{ColorProfile(counts)};
            const double tau = poincare_constant(exclusion_generator(sp, g)).value;
            if (first) {
                ref = tau;
                first = false;
            } else if (std::abs(tau - ref) > 1e-8) {
                fail.add(std::string(graph_kind_name(g.kind)) + ", kappa " +
                         ColorProfile(counts).to_string() + ": tau_rel " +
                         fmt(tau) + " != " + fmt(ref));
            }
        }
    }
    res.pass = fail.count == 0;
    res.detail = res.pass ? "tau_rel(kappa, G) agrees across kappa on cycle(5) "
                            "and complete_srw(5) within 1e-8"
                          : fail.first;
    return res;
}

// --- criterion 10 -----------------------------------------------------

CheckResult check_comparison(uint64_t seed) {
    CheckResult res{"comparison"};
    Failures fail;
    for (int n : {4, 5}) {
        const double c = comparison_constant(WeightedGraph::complete_srw(n), n);
        const double target = double(n) / (n - 1);
        if (std::abs(c - target) > 1e-9)
            fail.add("c(complete_srw(" + std::to_string(n) + ")) = " + fmt(c) +
                     ", expected " + fmt(target));
    }
    {
        const WeightedGraph g = WeightedGraph::cycle(5);
        const double c = comparison_constant(g, 5);
        StateSpace srw{ColorProfile({1, 4})};
        const double tau_rel_g =
            poincare_constant(exclusion_generator(srw, g)).value;
        const ColorProfile p({2, 3});
        const auto [lo, hi] = bound_colored(p, c, tau_rel_g);
        StateSpace sp(p);
        Budget budget;
        budget.seed = seed;
        budget.random_restarts = 32;
        budget.max_iterations = 20000;
        budget.patience = 400;
        const ConstantEstimate est = lsc_estimate(sp, g, budget);
        if (est.value < lo - 1e-6 || est.value > hi + 1e-9)
            fail.add("kappa (2,3) on cycle(5): lsc lb " + fmt(est.value) +
                     " outside colored interval [" + fmt(lo) + ", " + fmt(hi) + "]");
    }
    res.pass = fail.count == 0;
    res.detail = res.pass ? "c(complete_srw) = n/(n-1) within 1e-9; colored "
                            "interval contains the certified lsc bound on cycle(5)"
                          : fail.first;
    return res;
}

// --- criterion 11 -----------------------------------------------------

CheckResult check_mixing(uint64_t) {
    CheckResult res{"mixing"};
    Failures fail;
    {
        StateSpace sp{ColorProfile({1, 1})};
        const SparseOperator op =
            build_generator(sp, WeightedGraph::mean_field(2));
        const std::vector<double> grid = default_time_grid(1.0);
        const MixingCurve curve =
            tv_decay_exact(op, StartPolicy::fixed, 0, grid);
        for (size_t i = 0; i < grid.size(); ++i) {
            const double closed = 0.5 * std::exp(-grid[i]);
            if (std::abs(curve.tv[i] - closed) > 1e-10)
                fail.add("two-state TV at t = " + fmt(grid[i]) + " off by " +
                         fmt(curve.tv[i] - closed));
        }
    }
    struct Case {
        const char* name;
        WeightedGraph g;
    };
    for (const Case& c : {Case{"cycle(4)", WeightedGraph::cycle(4)},
                          Case{"hypercube(2)", WeightedGraph::hypercube(2)}}) {
        StateSpace sp{ColorProfile({2, 2})};
        const SparseOperator op = build_generator(sp, c.g);
        const MixingCurve curve =
            tv_decay_exact(op, StartPolicy::fixed, 0, default_time_grid(0.5));
        for (size_t i = 1; i < curve.tv.size(); ++i)
            if (curve.tv[i] > curve.tv[i - 1] + 1e-10)
                fail.add(std::string(c.name) + ": TV increases at t = " +
                         fmt(curve.times[i]));
    }
    res.pass = fail.count == 0;
    res.detail = res.pass ? "two-state TV curve matches (1/2)e^{-t} to 1e-10; "
                            "curves nonincreasing on cycle(4) and hypercube(2)"
                          : fail.first;
    return res;
}

using CheckFn = CheckResult (*)(uint64_t);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"spectral-insensitivity", check_spectral_insensitivity},
        {"exact-constants", check_exact_constants},
        {"main-sandwich", check_main_sandwich},
        {"mls-interval", check_mls_interval},
        {"chain-rule", check_chain_rule},
        {"coarsening", check_coarsening},
        {"isoperimetry", check_isoperimetry},
        {"recursion", check_recursion},
        {"aldous", check_aldous},
        {"comparison", check_comparison},
        {"mixing", check_mixing},
    };
    return reg;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

CheckResult run_check(const std::string& name, uint64_t seed) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) {
            const auto t0 = Clock::now();
            CheckResult res;
            try {
                res = fn(seed);
            } catch (const std::exception& e) {
                res.name = name;
                res.pass = false;
                res.detail = std::string("exception: ") + e.what();
            }
            res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            return res;
        }
    }
    throw ConfigError("unknown check '" + name + "'");
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    uint64_t seed) {
    std::vector<CheckResult> out;
    for (const std::string& n : names) out.push_back(run_check(n, seed));
    return out;
}

}  // namespace mslab
