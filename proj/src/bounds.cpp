#include "mslab/bounds.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "mslab/errors.hpp"

namespace mslab {

namespace {

const double kLog2 = std::log(2.0);
const double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_two_colors(const ColorProfile& p) {
    if (p.l() < 2)
        throw DegenerateSpaceError("bound requires at least 2 colors, got profile " +
                                   p.to_string());
}

}  // namespace

double phi_upper(const ColorProfile& profile) {
    require_two_colors(profile);
    return 4.0 / kLog2 *
           std::log(static_cast<double>(profile.n()) / profile.kappa_min());
}

double bound_complete_graph(int n) {
    if (n < 2) throw ConfigError("complete-graph bound needs n >= 2");
    if (n == 2) return 2.0;
    return n * std::log(n - 1.0) / (n - 2.0);
}

std::pair<double, double> bound_random_transposition(int n) {
    if (n < 2) throw ConfigError("random-transposition bound needs n >= 2");
    const double ln = std::log(static_cast<double>(n));
    return {ln, 4.0 * ln};
}

BernoulliLaplaceBound bound_bernoulli_laplace(int k, int n) {
    if (k <= 0 || k >= n)
        throw ConfigError("Bernoulli-Laplace bound needs 0 < k < n");
    const double expr =
        std::log(static_cast<double>(n) * n / (static_cast<double>(k) * (n - k)));
    return {expr, 2.0 / kLog2 * expr};
}

double bound_fow(const ColorProfile& profile) {
    require_two_colors(profile);
    double s = 0.0;
    for (int kell : profile.counts)
        s += std::log(4.0 * profile.n() / kell);
    return 2.0 / kLog2 * s;
}

std::pair<double, double> bound_main(const ColorProfile& profile) {
    require_two_colors(profile);
    return {std::log(static_cast<double>(profile.n()) / profile.kappa_min()),
            phi_upper(profile)};
}

double bound_trivial_chain(const ColorProfile& profile) {
    require_two_colors(profile);
    const double n = profile.n();
    const double km = profile.kappa_min();
    if (2 * profile.kappa_min() == profile.n()) return 2.0;  // continuity limit
    return n / (n - 2.0 * km) * std::log(n / km - 1.0);
}

TwoColorWeight two_color_weight(const ColorProfile& profile, int ell) {
    require_two_colors(profile);
    if (ell < 1 || ell > profile.l()) throw ConfigError("color out of range");
    const int kell = profile.counts[ell - 1];
    const double n = profile.n();
    TwoColorWeight out;
    out.lhs = (1.0 - kell / n) * bound_bernoulli_laplace(kell, profile.n()).upper;
    out.bound = 2.0 / kLog2 * std::log(n / profile.kappa_min());
    return out;
}

namespace {

double recursive_value(const ColorProfile& prof,
                       std::map<std::vector<int>, double>& memo,
                       RecursionTrace& trace) {
    const ColorProfile p = prof.canonical();
    auto it = memo.find(p.counts);
    if (it != memo.end()) return it->second;

    const int L = p.l();
    const double n = p.n();
    RecursionStep step;
    step.profile = p;
    double value;
    if (L == 2) {
        step.sigma1_coeff = 0.0;
        step.sigma2_term = 0.0;
        value = bound_bernoulli_laplace(p.counts[1], p.n()).upper;
    } else {
        double max_sub = 0.0;
        for (int ell = 1; ell <= L; ++ell)
            max_sub = std::max(max_sub,
                               recursive_value(p.removed(ell), memo, trace));
        double max_bl = 0.0;
        for (int ell = 1; ell <= L; ++ell) {
            const int kell = p.counts[ell - 1];
            max_bl = std::max(max_bl, 2.0 * (1.0 - kell / n) *
                                          bound_bernoulli_laplace(kell, p.n()).upper);
        }
        step.sigma1_coeff = (L - 2) * max_sub;
        step.sigma2_term = max_bl;
        value = (step.sigma1_coeff + step.sigma2_term) / (L - 1);
    }
    step.value = value;
    trace.steps.push_back(std::move(step));
    memo.emplace(p.counts, value);
    return value;
}

}  // namespace

RecursionTrace recursive_upper(const ColorProfile& profile) {
    require_two_colors(profile);
    RecursionTrace trace;
    std::map<std::vector<int>, double> memo;
    trace.final_value = recursive_value(profile, memo, trace);
    return trace;
}

std::pair<double, double> bound_iota(const ColorProfile& profile) {
    require_two_colors(profile);
    const double n = profile.n();
    const double lg = std::log(n / profile.kappa_min());
    return {kLog2 / 4.0 * n / lg, n / lg};
}

std::pair<double, double> bound_colored(const ColorProfile& profile, double c_g,
                                        double tau_rel_g) {
    require_two_colors(profile);
    if (c_g <= 0 || tau_rel_g <= 0)
        throw ConfigError("bound_colored needs positive c(G) and tau_rel(G)");
    const double lg = std::log(static_cast<double>(profile.n()) / profile.kappa_min());
    return {std::max(2.0 * tau_rel_g, lg), 4.0 / kLog2 * c_g * lg};
}

std::vector<BoundEntry> bounds_report(const ColorProfile& prof) {
    const ColorProfile p = prof.canonical();
    require_two_colors(p);
    std::vector<BoundEntry> rows;
    const auto main = bound_main(p);
    rows.push_back({"main", main.first, main.second, ""});
    rows.push_back({"fow", kNaN, bound_fow(p), ""});
    rows.push_back({"trivial_chain", kNaN, bound_trivial_chain(p),
                    "single-site chain value, not a bound on the walk"});
    const auto iota = bound_iota(p);
    rows.push_back({"iota", iota.first, iota.second, ""});
    const RecursionTrace rec = recursive_upper(p);
    rows.push_back({"recursive", kNaN, rec.final_value, ""});
    if (p.l() == 2) {
        const auto bl = bound_bernoulli_laplace(p.counts[1], p.n());
        rows.push_back({"bernoulli_laplace", bl.lower_shape, bl.upper,
                        "lower side up to an unspecified universal constant"});
    }
    if (p.kappa_min() == 1 && p.l() == 2)
        rows.push_back({"complete_graph", bound_complete_graph(p.n()),
                        bound_complete_graph(p.n()), "exact"});
    if (p.kappa_min() == 1 && p.l() == p.n()) {
        const auto rt = bound_random_transposition(p.n());
        rows.push_back({"random_transposition", rt.first, rt.second, ""});
    }
    return rows;
}

}  // namespace mslab
