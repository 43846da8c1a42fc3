#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "mslab/constants.hpp"
#include "mslab/errors.hpp"
#include "mslab/functionals.hpp"

namespace mslab {

namespace {

constexpr double kMlsFloor = 1e-12;  // f is kept >= this during MLS ascent

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

void normalize_l2mean(std::vector<double>& g) {
    double s = 0.0;
    for (double x : g) s += x * x;
    s = std::sqrt(s / static_cast<double>(g.size()));
    if (s > 0)
        for (double& x : g) x /= s;
}

struct RatioObjective {
    const SparseOperator& op;
    bool mls;  // false: Ent(g^2)/E(g,g); true: Ent(f)/E(f, log f), f = g^2

    // Returns the ratio, or -inf when the denominator vanishes or g is
    // numerically constant. The guard matters: for g = gbar(1 + u) the
    // ratio carries relative noise ~eps/|u|, so below spread 1e-6 an
    // ascent would climb evaluation noise instead of the objective (the
    // true ratio there is within O(spread^2) of its near-constant limit
    // anyway, which never exceeds the supremum).
    double value(const std::vector<double>& g) const {
        const uint64_t N = op.dim;
        const double gbar = mean(g);
        double spread = 0.0;
        for (double x : g) spread = std::max(spread, std::abs(x - gbar));
        if (spread < 1e-6 * std::max(1.0, std::abs(gbar)))
            return -std::numeric_limits<double>::infinity();
        std::vector<double> f(N);
        for (uint64_t i = 0; i < N; ++i)
            f[i] = std::max(g[i] * g[i], mls ? kMlsFloor : 0.0);
        const double m = mean(f);
        double num = 0.0;
        for (double v : f) num += entropy_kernel(v / m);
        num *= m / static_cast<double>(N);
        double den;
        if (mls) {
            std::vector<double> lf(N);
            for (uint64_t i = 0; i < N; ++i) lf[i] = std::log(f[i]);
            den = op.dirichlet(f, lf);
        } else {
            den = op.dirichlet(g, g);
        }
        if (!(den > 1e-300) || !std::isfinite(num))
            return -std::numeric_limits<double>::infinity();
        return num / den;
    }

    // Gradient of the ratio with respect to g.
    std::vector<double> gradient(const std::vector<double>& g, double ratio) const {
        const uint64_t N = op.dim;
        const double invN = 1.0 / static_cast<double>(N);
        std::vector<double> f(N);
        for (uint64_t i = 0; i < N; ++i)
            f[i] = std::max(g[i] * g[i], mls ? kMlsFloor : 0.0);
        const double m = mean(f);
        std::vector<double> grad_num(N);
        for (uint64_t i = 0; i < N; ++i)
            grad_num[i] = f[i] > 0 ? 2.0 * invN * g[i] * std::log(f[i] / m) : 0.0;
        std::vector<double> grad_den(N);
        double den;
        if (mls) {
            std::vector<double> lf(N), klf(N), kf(N);
            for (uint64_t i = 0; i < N; ++i) lf[i] = std::log(f[i]);
            op.apply_neg(lf.data(), klf.data());
            op.apply_neg(f.data(), kf.data());
            den = 0.0;
            for (uint64_t i = 0; i < N; ++i) den += f[i] * klf[i];
            den *= invN;
            for (uint64_t i = 0; i < N; ++i)
                grad_den[i] = invN * (klf[i] + kf[i] / f[i]) * 2.0 * g[i];
        } else {
            std::vector<double> kg(N);
            op.apply_neg(g.data(), kg.data());
            den = 0.0;
            for (uint64_t i = 0; i < N; ++i) den += g[i] * kg[i];
            den *= invN;
            for (uint64_t i = 0; i < N; ++i) grad_den[i] = 2.0 * invN * kg[i];
        }
        std::vector<double> out(N);
        for (uint64_t i = 0; i < N; ++i)
            out[i] = (grad_num[i] - ratio * grad_den[i]) / den;
        return out;
    }

    void project(std::vector<double>& g) const {
        const double floor = mls ? 1e-6 : 0.0;
        for (double& x : g) x = std::max(x, floor);
        normalize_l2mean(g);
    }
};

struct AscentResult {
    double ratio = -std::numeric_limits<double>::infinity();
    std::vector<double> g;
    int iterations = 0;
};

// Projected gradient ascent with Armijo backtracking (factor 0.5,
// initial step 1.0) on the normalized sphere.
AscentResult ascend(const RatioObjective& obj, std::vector<double> g,
                    const Budget& budget) {
    obj.project(g);
    AscentResult res;
    double ratio = obj.value(g);
    if (!std::isfinite(ratio)) return res;
    int stall = 0;
    int it = 0;
    for (; it < budget.max_iterations; ++it) {
        const std::vector<double> d = obj.gradient(g, ratio);
        double gnorm2 = 0.0;
        for (double x : d) gnorm2 += x * x;
        if (!(gnorm2 > 0) || !std::isfinite(gnorm2)) break;
        double step = 1.0;
        double new_ratio = ratio;
        std::vector<double> cand;
        bool accepted = false;
        while (step > 1e-14) {
            cand = g;
            for (size_t i = 0; i < cand.size(); ++i) cand[i] += step * d[i];
            obj.project(cand);
            const double r = obj.value(cand);
            if (std::isfinite(r) && r > ratio + 1e-4 * step * gnorm2) {
                new_ratio = r;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
        if (new_ratio - ratio < budget.improve_tol)
            ++stall;
        else
            stall = 0;
        g = std::move(cand);
        ratio = new_ratio;
        if (stall >= budget.patience) break;
    }
    res.ratio = ratio;
    res.g = std::move(g);
    res.iterations = it;
    return res;
}

enum class SeedClass { random, indicator, dictator, tilt, spectral };

struct Seed {
    SeedClass cls;
    std::vector<double> g;
};

// A = { xi_ell = first kappa_ell positions } for the first color of
// minimum count.
std::vector<double> extremal_indicator(const StateSpace& space) {
    const ColorProfile& p = space.profile();
    int ell = 1;
    for (int c = 1; c <= p.l(); ++c)
        if (p.counts[c - 1] == p.kappa_min()) {
            ell = c;
            break;
        }
    const int k = p.counts[ell - 1];
    std::vector<double> ind(space.size(), 0.0);
    for (uint64_t i = 0; i < space.size(); ++i) {
        const Word w = space.unrank(i);
        bool in = true;
        for (int pos = 0; pos < k && in; ++pos) in = (w[pos] == ell);
        for (int pos = k; pos < p.n() && in; ++pos) in = (w[pos] != ell);
        if (in) ind[i] = 1.0;
    }
    return ind;
}

std::vector<Seed> make_seeds(const StateSpace& space, const SparseOperator& op,
                             const Budget& budget, bool mls) {
    const uint64_t N = space.size();
    const ColorProfile& p = space.profile();
    std::vector<Seed> seeds;

    // (a) random starts: f ~ iid uniform(0.1, 1.1), g = sqrt(f)
    for (int r = 0; r < budget.random_restarts; ++r) {
        std::mt19937_64 rng(budget.seed + 1000003ull * (r + 1));
        std::uniform_real_distribution<double> uni(0.1, 1.1);
        std::vector<double> g(N);
        for (double& x : g) x = std::sqrt(uni(rng));
        seeds.push_back({SeedClass::random, std::move(g)});
    }

    // (b) extremal-set indicators (MLS: smoothed to (eps,1)-valued)
    const std::vector<double> ind = extremal_indicator(space);
    if (mls) {
        for (double eps : {1e-2, 1e-4}) {
            std::vector<double> g(N);
            for (uint64_t i = 0; i < N; ++i)
                g[i] = std::sqrt(ind[i] > 0 ? 1.0 : eps);
            seeds.push_back({SeedClass::indicator, std::move(g)});
        }
    } else {
        seeds.push_back({SeedClass::indicator, ind});
    }

    // (c) dictators: f = 1_{omega_1 = ell}
    for (int ell = 1; ell <= p.l(); ++ell) {
        std::vector<double> g(N, mls ? 1e-2 : 0.0);
        for (uint64_t i = 0; i < N; ++i)
            if (space.unrank(i)[0] == ell) g[i] = 1.0;
        seeds.push_back({SeedClass::dictator, std::move(g)});
    }

    // (d) exponential tilts of the extremal indicator
    for (double theta : {-2.0, -1.0, 1.0, 2.0, 4.0}) {
        std::vector<double> g(N);
        for (uint64_t i = 0; i < N; ++i) g[i] = std::exp(0.5 * theta * ind[i]);
        seeds.push_back({SeedClass::tilt, std::move(g)});
    }

    // (e) near-constant perturbations along the spectral-gap eigenvector
    try {
        const GapResult gap = spectral_gap(op);
        std::vector<double> h = gap.eigenvector;
        double hmax = 0.0;
        for (double x : h) hmax = std::max(hmax, std::abs(x));
        if (hmax > 0) {
            for (double& x : h) x /= hmax;
            for (double delta : {1e-2, 1e-3, 1e-4}) {
                for (double sign : {1.0, -1.0}) {
                    std::vector<double> g(N);
                    for (uint64_t i = 0; i < N; ++i)
                        g[i] = std::sqrt(1.0 + sign * delta * h[i]);
                    seeds.push_back({SeedClass::spectral, std::move(g)});
                }
            }
        }
    } catch (const std::exception&) {
        // reducible or degenerate operator: handled by the caller
    }
    return seeds;
}

ConstantEstimate run_variational(const StateSpace& space, const WeightedGraph& graph,
                                 const Budget& budget, bool mls) {
    if (space.num_colors() < 2)
        throw DegenerateSpaceError(
            "constants are undefined on a single-color (one-point) state space");
    const SparseOperator op = build_generator(space, graph);
    const RatioObjective obj{op, mls};
    std::vector<Seed> seeds = make_seeds(space, op, budget, mls);
    std::vector<AscentResult> results(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t s = 0; s < static_cast<int64_t>(seeds.size()); ++s)
        results[s] = ascend(obj, seeds[s].g, budget);

    int best = -1;
    double best_ratio = -std::numeric_limits<double>::infinity();
    double indicator_best = -std::numeric_limits<double>::infinity();
    int total_iters = 0;
    for (size_t s = 0; s < results.size(); ++s) {
        total_iters += results[s].iterations;
        const double r = results[s].ratio;
        if (std::isfinite(r) && r > best_ratio) {
            best_ratio = r;
            best = static_cast<int>(s);
        }
        if (seeds[s].cls == SeedClass::indicator && std::isfinite(r))
            indicator_best = std::max(indicator_best, r);
    }
    if (best < 0)
        throw ConfigError("all optimizer starts were degenerate (constant)");

    ConstantEstimate est;
    est.kind = EstimateKind::variational_lower_bound;
    est.witness.resize(space.size());
    const std::vector<double>& g = results[best].g;
    for (uint64_t i = 0; i < space.size(); ++i)
        est.witness[i] = std::max(g[i] * g[i], mls ? kMlsFloor : 0.0);
    // certification: re-evaluate the ratio at the stored witness
    est.value = obj.value(g);
    est.residual = std::abs(est.value - results[best].ratio);
    est.restarts_used = static_cast<int>(seeds.size());
    est.iterations = total_iters;
    est.indicator_seed_value = indicator_best;
    return est;
}

}  // namespace

ConstantEstimate lsc_estimate(const StateSpace& space, const WeightedGraph& graph,
                              const Budget& budget) {
    return run_variational(space, graph, budget, /*mls=*/false);
}

ConstantEstimate mlsc_estimate(const StateSpace& space, const WeightedGraph& graph,
                               const Budget& budget) {
    return run_variational(space, graph, budget, /*mls=*/true);
}

double extremal_indicator_ratio(const StateSpace& space, const WeightedGraph& graph) {
    const std::vector<double> ind = extremal_indicator(space);
    Observable f(space, ind);
    const double num = entropy(f);
    const double den = dirichlet_form(f, f, graph);  // sqrt(1_A) = 1_A
    if (!(den > 0)) throw ConfigError("extremal indicator has zero Dirichlet energy");
    return num / den;
}

}  // namespace mslab
