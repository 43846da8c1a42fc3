#include "mslab/exclusion.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <random>

#include "mslab/errors.hpp"

namespace mslab {

SparseOperator exclusion_generator(const StateSpace& space,
                                   const WeightedGraph& graph) {
    return build_generator(space, graph);
}

namespace {

// Truncation order: smallest m with Poisson(lambda*t) tail below 1e-13.
int poisson_truncation(double lt) {
    if (lt <= 0) return 0;
    double logw = -lt;  // log P(X = 0)
    double logcdf_missing = 0.0;
    // walk the pmf until the tail certificate holds
    double cum = std::exp(logw);
    int k = 0;
    while (cum < 1.0 - 1e-13 && k < 100000) {
        ++k;
        logw += std::log(lt) - std::log(static_cast<double>(k));
        cum += std::exp(logw);
    }
    (void)logcdf_missing;
    return k;
}

std::vector<double> poisson_weights(double lt, int m) {
    std::vector<double> w(m + 1);
    double logw = -lt;
    w[0] = std::exp(logw);
    for (int k = 1; k <= m; ++k) {
        logw += std::log(lt) - std::log(static_cast<double>(k));
        w[k] = std::exp(logw);
    }
    return w;
}

// Distribution at the grid times from one start state.
std::vector<std::vector<double>> evolve_from(const SparseOperator& op,
                                             uint64_t start,
                                             const std::vector<double>& times) {
    const uint64_t N = op.dim;
    const double lambda = std::max(op.max_diag(), 1e-300);
    double tmax = 0.0;
    for (double t : times) tmax = std::max(tmax, t);
    const int M = poisson_truncation(lambda * tmax);
    if (M >= 100000)
        throw CapError("uniformization truncation budget exceeded");

    std::vector<std::vector<double>> weights(times.size());
    for (size_t ti = 0; ti < times.size(); ++ti)
        weights[ti] = poisson_weights(lambda * times[ti], M);

    std::vector<std::vector<double>> dist(times.size(),
                                          std::vector<double>(N, 0.0));
    std::vector<double> mu(N, 0.0), next(N);
    mu[start] = 1.0;
    for (int k = 0; k <= M; ++k) {
        for (size_t ti = 0; ti < times.size(); ++ti) {
            const double w =
                k < static_cast<int>(weights[ti].size()) ? weights[ti][k] : 0.0;
            if (w == 0.0) continue;
            auto& d = dist[ti];
#pragma omp parallel for schedule(static)
            for (int64_t i = 0; i < static_cast<int64_t>(N); ++i)
                d[i] += w * mu[i];
        }
        if (k == M) break;
        // mu <- P mu with P = I + L/lambda (P symmetric)
        op.apply_neg(mu.data(), next.data());
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < static_cast<int64_t>(N); ++i)
            next[i] = mu[i] - next[i] / lambda;
        mu.swap(next);
    }
    return dist;
}

double tv_to_uniform(const std::vector<double>& p) {
    const double u = 1.0 / static_cast<double>(p.size());
    double s = 0.0;
    for (double v : p) s += std::abs(v - u);
    return 0.5 * s;
}

}  // namespace

MixingCurve tv_decay_exact(const SparseOperator& op, StartPolicy policy,
                           uint64_t start, const std::vector<double>& times) {
    if (op.dim > 20000)
        throw CapError("exact TV curves are capped at 20000 states");
    MixingCurve curve;
    curve.times = times;
    curve.tv.assign(times.size(), 0.0);
    std::vector<uint64_t> starts;
    switch (policy) {
        case StartPolicy::fixed:
            if (start >= op.dim) throw ConfigError("start state out of range");
            starts.push_back(start);
            curve.policy = "fixed";
            break;
        case StartPolicy::transitive:
            starts.push_back(0);
            curve.policy = "transitive";
            break;
        case StartPolicy::worst:
            if (op.dim >= 5000)
                throw CapError("worst-start TV curves are capped at 5000 states");
            for (uint64_t s = 0; s < op.dim; ++s) starts.push_back(s);
            curve.policy = "worst";
            break;
    }
    for (uint64_t s : starts) {
        const auto dist = evolve_from(op, s, times);
        for (size_t ti = 0; ti < times.size(); ++ti)
            curve.tv[ti] = std::max(curve.tv[ti], tv_to_uniform(dist[ti]));
    }
    return curve;
}

std::vector<double> default_time_grid(double gap_hint) {
    const double scale = gap_hint > 0 ? 1.0 / gap_hint : 5.0;
    const double lo = 0.01 * scale, hi = 20.0 * scale;
    std::vector<double> times{0.0};
    for (int i = 0; i < 64; ++i)
        times.push_back(lo * std::pow(hi / lo, i / 63.0));
    return times;
}

double mixing_time(const MixingCurve& curve, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw ConfigError("eps must lie in (0, 1]");
    double prev_t = 0.0, prev_tv = 1.0;
    if (!curve.times.empty() && curve.times[0] == 0.0) {
        prev_tv = curve.tv[0];
        if (prev_tv <= eps) return 0.0;
    }
    for (size_t i = 0; i < curve.times.size(); ++i) {
        if (curve.tv[i] <= eps) {
            const double t0 = prev_t, v0 = prev_tv;
            const double t1 = curve.times[i], v1 = curve.tv[i];
            if (v0 <= v1 + 1e-300) return t1;
            return t0 + (v0 - eps) / (v0 - v1) * (t1 - t0);
        }
        prev_t = curve.times[i];
        prev_tv = curve.tv[i];
    }
    throw ConfigError("TV curve never reaches eps within the time horizon");
}

TrajectorySample simulate_trajectory(const ColorProfile& profile,
                                     const WeightedGraph& graph, const Word& start,
                                     double horizon, uint64_t seed) {
    const int n = profile.n();
    if (profile.l() < 2)
        throw DegenerateSpaceError("single-color profile has zero jump rate");
    if (static_cast<int>(start.size()) != n || graph.n != n)
        throw ConfigError("start word / graph size mismatch");
    {
        std::vector<int> cnt(profile.l(), 0);
        for (uint8_t c : start) {
            if (c < 1 || c > profile.l())
                throw MalformedStateError("start word letter out of range");
            ++cnt[c - 1];
        }
        if (cnt != profile.counts)
            throw MalformedStateError("start word violates profile counts");
    }

    // Pair sampler over G_ij: row weights, then within-row neighbor weights.
    std::vector<double> row_weight(n, 0.0);
    std::vector<std::vector<std::pair<int, double>>> row_cum(n);
    double total2 = 0.0;  // sum over ordered pairs
    for (int i = 0; i < n; ++i) {
        double cum = 0.0;
        for (int j = 0; j < n; ++j) {
            const double w = graph.at(i, j);
            if (w > 0.0) {
                cum += w;
                row_cum[i].emplace_back(j, cum);
            }
        }
        row_weight[i] = cum;
        total2 += cum;
    }
    if (total2 <= 0.0) throw ConfigError("graph has no positive rates");
    std::vector<double> row_cdf(n);
    {
        double c = 0.0;
        for (int i = 0; i < n; ++i) {
            c += row_weight[i];
            row_cdf[i] = c;
        }
    }
    const double total_rate = total2 / 2.0;  // unordered pairs

    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(total_rate);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    TrajectorySample traj;
    traj.seed = seed;
    traj.start = start;
    Word w = start;
    std::optional<StateSpace> sp;
    try {
        sp.emplace(profile);
        traj.visited_ranks.push_back(sp->rank(w));
    } catch (const CapError&) {
        sp.reset();  // large n: record swap events only
    } catch (const OverflowError&) {
        sp.reset();
    }

    double t = 0.0;
    while (true) {
        t += expo(rng);
        if (t > horizon) break;
        // sample an unordered pair proportional to G_ij
        const double u = uni(rng) * total2;
        const int i = static_cast<int>(
            std::lower_bound(row_cdf.begin(), row_cdf.end(), u) - row_cdf.begin());
        const double v = uni(rng) * row_weight[i];
        int j = row_cum[i].back().first;
        for (const auto& [cand, cum] : row_cum[i])
            if (v <= cum) {
                j = cand;
                break;
            }
        if (w[i] == w[j]) continue;  // thinned no-op
        std::swap(w[i], w[j]);
        traj.jump_times.push_back(t);
        traj.swaps.emplace_back(std::min(i, j) + 1, std::max(i, j) + 1);
        if (sp) traj.visited_ranks.push_back(sp->rank(w));
    }
    return traj;
}

void store_mixing_curve_csv(const MixingCurve& curve, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out.precision(17);
    out << "time,tv\n";
    for (size_t i = 0; i < curve.times.size(); ++i)
        out << curve.times[i] << ',' << curve.tv[i] << '\n';
}

void store_trajectory_csv(const TrajectorySample& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out.precision(17);
    out << "# start=";
    for (size_t i = 0; i < t.start.size(); ++i)
        out << (i ? "," : "") << static_cast<int>(t.start[i]);
    out << " seed=" << t.seed << "\n";
    out << "time,i,j\n";
    for (size_t k = 0; k < t.jump_times.size(); ++k)
        out << t.jump_times[k] << ',' << t.swaps[k].first << ','
            << t.swaps[k].second << '\n';
}

}  // namespace mslab
