#include "mslab/functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "mslab/errors.hpp"
#include "mslab/reduce.hpp"

namespace mslab {

namespace {

// f log f with 0 log 0 = 0; values in [-1e-14, 0) are numerical noise.
double xlogx(double v) {
    if (v <= 0.0) {
        if (v < -1e-14)
            throw std::domain_error("entropy requires nonnegative values, got " +
                                    std::to_string(v));
        return 0.0;
    }
    return v * std::log(v);
}

void check_same_space(const Observable& f, const Observable& g) {
    if (f.space != g.space || f.size() != g.size())
        throw ConfigError("observables live on different state spaces");
}

double dirichlet_sum(const Observable& f, const Observable& g,
                     const WeightedGraph& graph, bool parallel) {
    const StateSpace& sp = *f.space;
    const int n = sp.n();
    if (graph.n != n)
        throw ConfigError("graph has " + std::to_string(graph.n) +
                          " sites but the profile has " + std::to_string(n));
    auto term = [&](uint64_t idx) {
        const Word w = sp.unrank(idx);
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (w[i] == w[j]) continue;  // gradient vanishes
                const double gij = graph.at(i, j);
                if (gij == 0.0) continue;
                Word w2 = w;
                std::swap(w2[i], w2[j]);
                const uint64_t nb = sp.rank(w2);
                s += gij * (f[nb] - f[idx]) * (g[nb] - g[idx]);
            }
        return s;
    };
    double total;
    if (parallel) {
        total = block_sum(sp.size(), term);
    } else {
        total = 0.0;
        for (uint64_t idx = 0; idx < sp.size(); ++idx) total += term(idx);
    }
    return total / (2.0 * static_cast<double>(sp.size()));
}

}  // namespace

double entropy_kernel(double t) {
    if (t <= 0.0) return 1.0;  // t log t -> 0
    const double e = t - 1.0;
    if (std::abs(e) < 1e-3)
        return e * e * (0.5 - e / 6.0 + e * e / 12.0 - e * e * e / 20.0);
    return t * std::log(t) - e;
}

double expectation(const Observable& f) {
    return block_sum(f.size(), [&](uint64_t i) { return f[i]; }) /
           static_cast<double>(f.size());
}

double variance(const Observable& f) {
    const double m = expectation(f);
    const double m2 =
        block_sum(f.size(), [&](uint64_t i) { return f[i] * f[i]; }) /
        static_cast<double>(f.size());
    double v = m2 - m * m;
    return v < 0.0 ? 0.0 : v;
}

double entropy(const Observable& f) {
    for (double v : f.values)
        if (v < -1e-14)
            throw std::domain_error("entropy requires nonnegative values, got " +
                                    std::to_string(v));
    const double m = expectation(f);
    if (m <= 0.0) return 0.0;  // f vanishes identically
    // Ent(f) = m E[psi(f/m)] with psi = t log t - t + 1: every term is
    // nonnegative, so near-constant f loses no precision to cancellation.
    const double s =
        block_sum(f.size(), [&](uint64_t i) { return entropy_kernel(f[i] / m); }) /
        static_cast<double>(f.size());
    return m * s;
}

double dirichlet_form(const Observable& f, const Observable& g,
                      const WeightedGraph& graph) {
    check_same_space(f, g);
    return dirichlet_sum(f, g, graph, /*parallel=*/true);
}

std::vector<uint32_t> color_group_index(const StateSpace& space, int color) {
    const int n = space.n();
    const int L = space.num_colors();
    if (color < 1 || color > L) throw ConfigError("color out of range");
    // Pascal triangle for subset ranks (combinatorial number system).
    std::vector<std::vector<uint64_t>> choose(n + 1, std::vector<uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        choose[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
    }
    std::vector<uint32_t> group(space.size());
#pragma omp parallel for schedule(static)
    for (int64_t idx = 0; idx < static_cast<int64_t>(space.size()); ++idx) {
        const Word w = space.unrank(static_cast<uint64_t>(idx));
        uint64_t r = 0;
        int t = 0;
        for (int i = 0; i < n; ++i)
            if (w[i] == color) r += choose[i][++t];
        group[idx] = static_cast<uint32_t>(r);
    }
    return group;
}

namespace {

struct GroupStats {
    std::vector<double> mean;      // E[f | group]
    std::vector<double> mean_log;  // E[f log f | group]
    uint64_t group_size;
};

GroupStats group_stats(const Observable& f, int color) {
    const StateSpace& sp = *f.space;
    const std::vector<uint32_t> group = color_group_index(sp, color);
    uint32_t ngroups = 0;
    for (uint32_t g : group) ngroups = std::max(ngroups, g + 1);
    GroupStats st;
    st.mean.assign(ngroups, 0.0);
    st.mean_log.assign(ngroups, 0.0);
    st.group_size = sp.size() / ngroups;
    for (uint64_t i = 0; i < sp.size(); ++i) {
        st.mean[group[i]] += f[i];
        st.mean_log[group[i]] += xlogx(f[i]);
    }
    const double inv = 1.0 / static_cast<double>(st.group_size);
    for (uint32_t g = 0; g < ngroups; ++g) {
        st.mean[g] *= inv;
        st.mean_log[g] *= inv;
    }
    return st;
}

}  // namespace

Decomposition conditional_decomposition(const Observable& f, int color) {
    const GroupStats st = group_stats(f, color);
    const uint32_t ngroups = static_cast<uint32_t>(st.mean.size());
    double local = 0.0;
    double proj_mlog = 0.0;
    double total_mean = 0.0;
    for (uint32_t g = 0; g < ngroups; ++g) {
        double ent_g = st.mean_log[g] - xlogx(st.mean[g]);
        if (ent_g < 0.0 && ent_g > -1e-12) ent_g = 0.0;
        local += ent_g;
        proj_mlog += xlogx(st.mean[g]);
        total_mean += st.mean[g];
    }
    local /= ngroups;
    proj_mlog /= ngroups;
    total_mean /= ngroups;
    double projected = proj_mlog - xlogx(total_mean);
    if (projected < 0.0 && projected > -1e-12) projected = 0.0;
    return {local, projected};
}

Observable conditional_expectation(const Observable& f, int color) {
    const StateSpace& sp = *f.space;
    const GroupStats st = group_stats(f, color);
    const std::vector<uint32_t> group = color_group_index(sp, color);
    std::vector<double> out(sp.size());
    for (uint64_t i = 0; i < sp.size(); ++i) out[i] = st.mean[group[i]];
    return Observable(sp, std::move(out));
}

EntropySplit weighted_entropy_split(const Observable& f) {
    const StateSpace& sp = *f.space;
    const int L = sp.num_colors();
    if (L < 2)
        throw DegenerateSpaceError("weighted entropy split needs at least 2 colors");
    const double n = sp.n();
    EntropySplit out{0.0, 0.0};
    for (int ell = 1; ell <= L; ++ell) {
        const double wgt = 1.0 - sp.profile().counts[ell - 1] / n;
        const Decomposition d = conditional_decomposition(f, ell);
        out.sigma1 += wgt * d.local;
        out.sigma2 += wgt * d.projected;
    }
    return out;
}

namespace ref {

double expectation(const Observable& f) {
    double s = 0.0;
    for (double v : f.values) s += v;
    return s / static_cast<double>(f.size());
}

double entropy(const Observable& f) {
    double s = 0.0, m = 0.0;
    for (double v : f.values) {
        s += xlogx(v);
        m += v;
    }
    m /= static_cast<double>(f.size());
    double e = s / static_cast<double>(f.size()) - xlogx(m);
    if (e < 0.0 && e > -1e-12) e = 0.0;
    return e;
}

double dirichlet_form(const Observable& f, const Observable& g,
                      const WeightedGraph& graph) {
    check_same_space(f, g);
    return dirichlet_sum(f, g, graph, /*parallel=*/false);
}

}  // namespace ref

}  // namespace mslab
